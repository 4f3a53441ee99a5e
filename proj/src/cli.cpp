#include "garside/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "garside/conjugacy.hpp"
#include "garside/errors.hpp"
#include "garside/problems.hpp"
#include "garside/structures.hpp"
#include "garside/translation.hpp"

namespace garside::cli {

namespace {

using nlohmann::json;

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : text_(text) {}

  StructurePtr parse() {
    StructurePtr s = structure();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters in group descriptor");
    return s;
  }

 private:
  StructurePtr structure() {
    skip_space();
    std::size_t start = pos_;
    std::string kind = word();
    if (kind == "braid") {
      expect(':');
      int n = integer();
      try {
        return braid_structure(n);
      } catch (const std::out_of_range& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (kind == "torus") {
      expect(':');
      int n = integer();
      expect(':');
      int m = integer();
      try {
        return torus_structure(n, m);
      } catch (const std::out_of_range& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (kind == "product") {
      expect(':');
      expect('(');
      StructurePtr left = structure();
      expect(',');
      StructurePtr right = structure();
      expect(')');
      return product_structure(std::move(left), std::move(right));
    }
    throw ParseError("unknown group kind '" + kind + "'", start);
  }

  std::string word() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_space();
    int value = 0;
    auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(end - text_.data());
    return value;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

StructurePtr parse_structure(std::string_view descriptor) { return DescriptorParser(descriptor).parse(); }

std::vector<WordToken> tokenize_word(std::string_view text) {
  std::vector<WordToken> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view tok = text.substr(start, i - start);
    WordToken t;
    t.position = start;
    auto caret = tok.find('^');
    t.generator = std::string(tok.substr(0, caret));
    if (t.generator.empty()) throw ParseError("missing generator name", start);
    if (caret != std::string_view::npos) {
      std::string_view digits = tok.substr(caret + 1);
      const char* first = digits.data();
      const char* last = digits.data() + digits.size();
      if (first != last && *first == '+') ++first;
      auto [end, ec] = std::from_chars(first, last, t.exponent);
      if (ec != std::errc() || end != last || digits.empty())
        throw ParseError("malformed exponent '" + std::string(digits) + "'", start + caret + 1);
      // D^0 is how the identity is written back out; atoms need a nonzero exponent.
      if (t.exponent == 0 && t.generator != "D") throw ParseError("exponent must be nonzero", start + caret + 1);
    }
    tokens.push_back(std::move(t));
  }
  return tokens;
}

Element parse_word(const StructurePtr& structure, std::string_view text) {
  Element g = Element::identity(structure);
  for (const auto& t : tokenize_word(text)) {
    if (t.generator == "D") {
      g = multiply(g, Element::delta_power(structure, t.exponent));
      continue;
    }
    const auto& atoms = structure->atoms();
    auto it = std::find_if(atoms.begin(), atoms.end(), [&](const Atom& a) { return a.name == t.generator; });
    if (it == atoms.end())
      throw ParseError("unknown generator '" + t.generator + "' for " + structure->descriptor(), t.position);
    g = multiply(g, power(Element::from_simple(structure, structure->atom(it->id)), t.exponent));
  }
  return g;
}

std::string format_simple(const GarsideStructure& s, const Simple& x) {
  std::string out;
  for (auto id : s.atom_word(x)) {
    if (!out.empty()) out += ' ';
    out += s.atoms()[id].name;
  }
  return out;
}

std::string format_word(const Element& g) {
  std::string out;
  if (g.inf() == 1) out = "D";
  else if (g.inf() != 0 || g.factors().empty()) out = "D^" + std::to_string(g.inf());
  for (const auto& f : g.factors()) {
    if (!out.empty()) out += ' ';
    out += format_simple(g.structure(), f);
  }
  return out;
}

std::string format_normal_form(const Element& g) {
  std::string out = "D^" + std::to_string(g.inf()) + " · ";
  if (g.factors().empty()) return out + "(empty)";
  for (const auto& f : g.factors()) out += "(" + format_simple(g.structure(), f) + ")";
  return out;
}

namespace {

json element_object(const Element& g) {
  json factors = json::array();
  for (const auto& f : g.factors()) {
    json letters = json::array();
    for (auto id : g.structure().atom_word(f)) letters.push_back(g.structure().atoms()[id].name);
    factors.push_back(std::move(letters));
  }
  return json{{"group", g.structure().descriptor()}, {"inf", g.inf()}, {"factors", std::move(factors)}};
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

struct Options {
  std::string group;
  bool json = false;
  bool conj = false;
  long long root_n = 2;
  std::size_t sss_cap = kDefaultSssCap;
  std::size_t candidate_cap = kDefaultCandidateCap;
  std::vector<std::string> words;
};

template <class Payload>
bool report_limit(const ProblemAnswer<Payload>& a, std::ostream& err) {
  if (a.outcome != Outcome::ResourceLimit) return false;
  err << "resource limit: " << a.diagnostic << "\n";
  return true;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out), s_(parse_structure(o.group)) {
    limits_.sss_cap = o.sss_cap;
    limits_.candidate_cap = o.candidate_cap;
  }

  Element word(std::size_t i) const { return parse_word(s_, o_.words.at(i)); }

  int nf() {
    Element g = word(0);
    if (o_.json) {
      json j = element_object(g);
      j["sup"] = g.sup();
      j["len"] = g.len();
      out_ << j.dump() << "\n";
    } else {
      out_ << format_normal_form(g) << "\n"
           << "inf=" << g.inf() << " sup=" << g.sup() << " len=" << g.len() << "\n";
    }
    return 0;
  }

  int tnum() {
    Element g = word(0);
    TranslationTriple t = translation_triple(g);
    Rational td = translation_number(g, t);
    if (o_.json) {
      out_ << json{{"t_inf", t.t_inf.to_string()}, {"t_sup", t.t_sup.to_string()},
                   {"t_len", t.t_len.to_string()}, {"t_D", td.to_string()},
                   {"t_Dbar", t.t_len.to_string()}}.dump()
           << "\n";
    } else {
      out_ << "t_inf=" << t.t_inf << " t_sup=" << t.t_sup << " t_len=" << t.t_len << " t_D=" << td << "\n"
           << "t_Dbar=" << t.t_len << "\n";
    }
    return 0;
  }

  int straight() {
    Element g = word(0);
    Straightness s = straightness(g);
    Straightness c = conjugate_straightness(g);
    if (o_.json) {
      out_ << json{{"inf_straight", s.inf_straight}, {"sup_straight", s.sup_straight},
                   {"conj_inf_straight", c.inf_straight}, {"conj_sup_straight", c.sup_straight}}.dump()
           << "\n";
    } else {
      out_ << "inf_straight=" << bool_text(s.inf_straight) << " sup_straight=" << bool_text(s.sup_straight)
           << "\nconj_inf_straight=" << bool_text(c.inf_straight)
           << " conj_sup_straight=" << bool_text(c.sup_straight) << "\n";
    }
    return 0;
  }

  int summit_cmd() {
    Element g = word(0);
    SummitData d = summit(g);
    if (o_.json) {
      out_ << json{{"inf_s", d.inf_s}, {"sup_s", d.sup_s}, {"representative", element_object(d.representative)},
                   {"witness", element_object(d.witness)}}.dump()
           << "\n";
    } else {
      out_ << "inf_s=" << d.inf_s << " sup_s=" << d.sup_s << "\nrepresentative " << format_word(d.representative)
           << "\nwitness " << format_word(d.witness) << "\n";
    }
    return 0;
  }

  int sss() {
    SuperSummitSet set = super_summit_set(word(0), limits_.sss_cap);
    if (o_.json) {
      json elems = json::array();
      for (const auto& h : set.elements()) elems.push_back(element_object(h));
      out_ << json{{"inf_s", set.summit.inf_s}, {"sup_s", set.summit.sup_s}, {"size", set.members.size()},
                   {"elements", std::move(elems)}}.dump()
           << "\n";
    } else {
      out_ << "inf_s=" << set.summit.inf_s << " sup_s=" << set.summit.sup_s << " size=" << set.members.size()
           << "\n";
      for (const auto& h : set.elements()) out_ << format_normal_form(h) << "\n";
    }
    return 0;
  }

  int conj() {
    auto w = are_conjugate(word(0), word(1), limits_.sss_cap);
    if (o_.json) {
      json j{{"conjugate", w.has_value()}};
      if (w) j["witness"] = element_object(w->conjugator);
      out_ << j.dump() << "\n";
    } else if (w) {
      out_ << "conjugate, witness " << format_word(w->conjugator) << "\n";
    } else {
      out_ << "not conjugate\n";
    }
    return 0;
  }

  int power_cmd(std::ostream& err) {
    auto a = solve_power(word(0), word(1), o_.conj, limits_);
    if (report_limit(a, err)) return 1;
    if (o_.json) {
      json j{{"solved", a.has_solution()}};
      if (a.has_solution()) {
        j["n"] = a.solution->n;
        if (a.solution->witness) j["witness"] = element_object(*a.solution->witness);
      }
      out_ << j.dump() << "\n";
    } else if (a.has_solution()) {
      out_ << "n=" << a.solution->n;
      if (a.solution->witness) out_ << ", witness " << format_word(*a.solution->witness);
      out_ << "\n";
    } else {
      out_ << "no solution\n";
    }
    return 0;
  }

  int root(std::ostream& err) {
    auto a = solve_root_conjugacy(word(0), o_.root_n, limits_);
    if (report_limit(a, err)) return 1;
    if (o_.json) {
      json j{{"solved", a.has_solution()}};
      if (a.has_solution()) {
        j["root"] = element_object(a.solution->root);
        j["witness"] = element_object(a.solution->witness);
      }
      out_ << j.dump() << "\n";
    } else if (a.has_solution()) {
      out_ << "root " << format_word(a.solution->root) << ", witness " << format_word(a.solution->witness) << "\n";
    } else {
      out_ << "no solution\n";
    }
    return 0;
  }

  int properpower(std::ostream& err) {
    auto a = solve_proper_power_conjugacy(word(0), limits_);
    if (report_limit(a, err)) return 1;
    if (o_.json) {
      json j{{"solved", a.has_solution()}};
      if (a.has_solution()) {
        j["root"] = element_object(a.solution->root);
        j["n"] = a.solution->n;
        j["witness"] = element_object(a.solution->witness);
      }
      out_ << j.dump() << "\n";
    } else if (a.has_solution()) {
      out_ << "root " << format_word(a.solution->root) << ", n=" << a.solution->n << ", witness "
           << format_word(a.solution->witness) << "\n";
    } else {
      out_ << "no solution\n";
    }
    return 0;
  }

  int genpower(std::ostream& err) {
    auto a = solve_generalized_power(word(0), word(1), o_.conj, limits_);
    if (report_limit(a, err)) return 1;
    if (o_.json) {
      json j{{"solved", a.has_solution()}};
      if (a.has_solution()) {
        j["n"] = a.solution->n;
        j["m"] = a.solution->m;
        if (a.solution->witness) j["witness"] = element_object(*a.solution->witness);
      }
      out_ << j.dump() << "\n";
    } else if (a.has_solution()) {
      out_ << "n=" << a.solution->n << " m=" << a.solution->m;
      if (a.solution->witness) out_ << ", witness " << format_word(*a.solution->witness);
      out_ << "\n";
    } else {
      out_ << "no solution\n";
    }
    return 0;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  StructurePtr s_;
  SearchLimits limits_;
};

}  // namespace

std::string element_json(const Element& g) { return element_object(g).dump(); }

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Normal forms, summit sets, translation numbers and power problems in Garside groups",
               "garside"};
  app.require_subcommand(1);
  app.add_option("--sss-cap", o.sss_cap, "Maximum super summit set size")->capture_default_str();
  app.add_option("--candidate-cap", o.candidate_cap, "Maximum root-search candidates")->capture_default_str();

  auto add = [&](const std::string& name, const std::string& help, std::size_t n_words,
                 const std::string& words_help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--group", o.group, "Group descriptor: braid:<n>, torus:<N>:<M>, product:(<a>,<b>)")
        ->required();
    sub->add_flag("--json", o.json, "Emit JSON");
    sub->add_option("words", o.words, words_help)->expected(static_cast<int>(n_words))->required();
    return sub;
  };
  add("nf", "Normal form with inf, sup and len", 1, "Word");
  add("tnum", "t_inf, t_sup, t_len, translation number and quotient translation number", 1, "Word");
  add("straight", "Inf/sup straightness and conjugate straightness", 1, "Word");
  add("summit", "inf_s, sup_s, a summit representative and its conjugator", 1, "Word");
  add("sss", "Super summit set", 1, "Word");
  add("conj", "Decide conjugacy of two words", 2, "Two words");
  add("power", "Find n with h^n = g (or conjugate, with --conj)", 2, "g h")
      ->add_flag("--conj", o.conj, "Solve up to conjugacy");
  add("root", "Find h with h^n conjugate to g", 1, "Word")
      ->add_option("-n", o.root_n, "Root exponent (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  add("properpower", "Find h and n >= 2 with h^n conjugate to g", 1, "Word");
  add("genpower", "Find nonzero n, m with g^n = h^m (or conjugate, with --conj)", 2, "g h")
      ->add_flag("--conj", o.conj, "Solve up to conjugacy");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    Runner run(o, out);
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "nf") return run.nf();
    if (name == "tnum") return run.tnum();
    if (name == "straight") return run.straight();
    if (name == "summit") return run.summit_cmd();
    if (name == "sss") return run.sss();
    if (name == "conj") return run.conj();
    if (name == "power") return run.power_cmd(err);
    if (name == "root") return run.root(err);
    if (name == "properpower") return run.properpower(err);
    if (name == "genpower") return run.genpower(err);
    err << "usage error: unknown subcommand " << name << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return 1;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace garside::cli
