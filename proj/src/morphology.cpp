#include "finestyle/morphology.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "finestyle/error.hpp"
#include "text_util.hpp"

namespace finestyle {

namespace detail {
extern const char* const kIrregularVerbsTsv;
}

using detail::ends_with;

std::string_view to_string(VerbForm form) {
  switch (form) {
    case VerbForm::Base: return "base";
    case VerbForm::Past: return "past";
    case VerbForm::PastParticiple: return "past-participle";
    case VerbForm::Present3sg: return "present-3sg";
    case VerbForm::PresentNon3sg: return "present-non3sg";
    case VerbForm::Gerund: return "gerund";
  }
  return "base";
}

std::optional<VerbForm> verb_form_of_tag(std::string_view tag) {
  if (tag == "VB") return VerbForm::Base;
  if (tag == "VBD") return VerbForm::Past;
  if (tag == "VBN") return VerbForm::PastParticiple;
  if (tag == "VBZ") return VerbForm::Present3sg;
  if (tag == "VBP") return VerbForm::PresentNon3sg;
  if (tag == "VBG") return VerbForm::Gerund;
  return std::nullopt;
}

std::string_view tag_of_verb_form(VerbForm form) {
  switch (form) {
    case VerbForm::Base: return "VB";
    case VerbForm::Past: return "VBD";
    case VerbForm::PastParticiple: return "VBN";
    case VerbForm::Present3sg: return "VBZ";
    case VerbForm::PresentNon3sg: return "VBP";
    case VerbForm::Gerund: return "VBG";
  }
  return "VB";
}

bool is_noun_tag(std::string_view tag) {
  return tag == "NN" || tag == "NNS" || tag == "NNP" || tag == "NNPS";
}
bool is_verb_tag(std::string_view tag) {
  return tag == "MD" || (tag.size() >= 2 && tag.substr(0, 2) == "VB");
}
bool is_adjective_tag(std::string_view tag) { return tag == "JJ" || tag == "JJR" || tag == "JJS"; }
bool is_adverb_tag(std::string_view tag) { return tag == "RB" || tag == "RBR" || tag == "RBS"; }
bool is_pronoun_tag(std::string_view tag) { return tag == "PRP"; }

// ---------------------------------------------------------------------------
// Irregular table

IrregularTable IrregularTable::parse(std::istream& in, const std::string& source_name) {
  IrregularTable t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v = detail::trim_cr(line);
    if (v.empty() || v.front() == '#') continue;
    auto cols = detail::split(v, '\t');
    if (cols.size() != 4)
      fail(ErrorCode::MalformedLine, source_name + ":" + std::to_string(lineno) +
                                         ": expected 4 columns, got " + std::to_string(cols.size()));
    for (auto& c : cols) c = detail::to_lower(c);
    if (t.entries_.count(cols[0]))
      fail(ErrorCode::DuplicateKey, source_name + ":" + std::to_string(lineno) + ": " + cols[0]);
    t.by_past_.emplace(cols[1], cols[0]);
    t.by_participle_.emplace(cols[2], cols[0]);
    t.by_3sg_.emplace(cols[3], cols[0]);
    t.entries_.emplace(cols[0], IrregularForms{cols[1], cols[2], cols[3]});
  }
  return t;
}

IrregularTable IrregularTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MissingFile, path);
  return parse(in, path);
}

const IrregularTable& IrregularTable::builtin() {
  static const IrregularTable table = [] {
    std::istringstream in(detail::kIrregularVerbsTsv);
    return parse(in, "builtin irregular table");
  }();
  return table;
}

const IrregularForms* IrregularTable::find(std::string_view lemma) const {
  auto it = entries_.find(lemma);
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

std::optional<std::string> lookup(const std::map<std::string, std::string, std::less<>>& m,
                                  std::string_view key) {
  auto it = m.find(key);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

}  // namespace

std::optional<std::string> IrregularTable::lemma_of_past(std::string_view form) const {
  return lookup(by_past_, form);
}
std::optional<std::string> IrregularTable::lemma_of_participle(std::string_view form) const {
  return lookup(by_participle_, form);
}
std::optional<std::string> IrregularTable::lemma_of_3sg(std::string_view form) const {
  return lookup(by_3sg_, form);
}

// ---------------------------------------------------------------------------
// Orthography helpers

namespace {

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool is_consonant_at(std::string_view w, std::size_t i) {
  char c = w[i];
  if (c < 'a' || c > 'z') return false;
  if (is_vowel(c)) return false;
  // "y" after a consonant behaves as a vowel ("try"), word-initially as a consonant.
  if (c == 'y') return i == 0 || is_vowel(w[i - 1]);
  return true;
}

std::size_t syllables(std::string_view w) {
  std::size_t n = 0;
  bool in_vowel = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool v = !is_consonant_at(w, i) && w[i] >= 'a' && w[i] <= 'z';
    if (v && !in_vowel) ++n;
    in_vowel = v;
  }
  return n;
}

// consonant-vowel-consonant ending, with "qu" counted as a consonant.
bool ends_cvc(std::string_view w) {
  if (w.size() < 3) {
    return w.size() == 2 && !is_consonant_at(w, 0) && is_consonant_at(w, 1) && false;
  }
  std::size_t n = w.size();
  char last = w[n - 1];
  if (!is_consonant_at(w, n - 1) || last == 'w' || last == 'x' || last == 'y') return false;
  if (!is_vowel(w[n - 2])) return false;
  if (is_consonant_at(w, n - 3)) return true;
  return w[n - 3] == 'u' && n >= 4 && w[n - 4] == 'q';
}

// Polysyllabic verbs with final stress; these double like monosyllables.
constexpr std::array kStressFinal = {
    "abet",    "abhor",   "acquit",  "admit",    "allot",   "annul",   "commit",  "compel",
    "concur",  "confer",  "control", "defer",    "deter",   "embed",   "emit",    "equip",
    "excel",   "expel",   "extol",   "impel",    "incur",   "infer",   "occur",   "omit",
    "patrol",  "permit",  "prefer",  "propel",   "rebel",   "recur",   "refer",   "regret",
    "remit",   "repel",   "submit",  "transfer", "transmit", "outfit", "format",  "program",
    "befit",   "unpin",   "upset",   "dispel",   "forget",  "begin",   "outwit",  "overstep"};

constexpr std::array kAddK = {"panic", "picnic", "mimic", "traffic", "frolic"};

bool in_list(std::string_view w, const auto& list) {
  return std::find(list.begin(), list.end(), w) != list.end();
}

bool doubles_final_consonant(std::string_view lemma) {
  if (!ends_cvc(lemma)) return false;
  if (syllables(lemma) == 1) return true;
  return in_list(lemma, kStressFinal);
}

// Stems that end in a doubled consonant in their citation form.
constexpr std::array kDoubledLemmas = {"add", "err", "purr", "butt", "ebb", "egg", "boycott",
                                       "putt", "odd", "buzz", "fizz", "whizz", "jazz"};

// Stems whose citation form carries a silent final "e" that the rules below
// would not restore, and stems that look like they need one but do not.
constexpr std::array kSilentEStems = {
    "ignor", "explor", "restor", "stor", "scor", "ador", "implor", "deplor", "snor",
    "invit", "unit",   "cit",    "excit", "recit", "ignit", "incit", "delet", "complet",
    "compet", "deplet", "ow",    "bor",   "pictur", "interfer", "persever", "adher", "cohere",
    "creat", "revers", "convers", "endors", "disburs", "reimburs", "immers", "travers", "rehears",
    "reassur", "coerc", "elaps", "collaps", "laps", "rins", "sens", "licens", "dispens",
    "condens", "expens", "respons", "rever", "sever", "clos", "tens"};
constexpr std::array kNoSilentEStems = {"focus", "bias", "alias", "canvas", "gas", "bus", "plus",
                                        "chorus", "combat", "equal", "signal", "total", "level",
                                        "model", "cancel", "label", "travel", "fuel", "dial",
                                        "trial", "rival", "pivot", "pilot", "ballot", "carpet",
                                        "bang", "clang", "twang", "harass", "embarrass",
                                        "honor", "favor", "labor", "anchor"};

// Whether a stripped stem ("urg", "receiv", "not") needs its silent "e" back.
bool needs_silent_e(std::string_view s) {
  if (s.size() < 2) return false;
  if (in_list(s, kNoSilentEStems)) return false;
  if (in_list(s, kSilentEStems)) return true;
  std::size_t n = s.size();
  char last = s[n - 1];
  char prev = s[n - 2];
  // "qu" counts as a consonant cluster ("requir", "acquir").
  auto cons = [&](std::size_t i) {
    return is_consonant_at(s, i) || (s[i] == 'u' && i > 0 && s[i - 1] == 'q');
  };
  if (last == 'e') return false;
  if (last == 'v' || last == 'u') return true;  // receiv(e), argu(e)
  if (last == 'c') return true;                 // introduc(e)
  if (last == 'z') return prev != 'z';          // realiz(e)
  if (last == 'g') {
    if (prev == 'r' || prev == 'l' || prev == 'd') return true;  // urg(e) bulg(e) judg(e)
    if (prev == 'n') {
      if (n < 3) return false;
      char c3 = s[n - 3];
      return (c3 == 'a' && n > 4) || c3 == 'e' || c3 == 'u';  // chang(e) aveng(e) plung(e)
    }
    return is_vowel(prev);  // manag(e) oblig(e)
  }
  if (last == 's') {
    if (prev == 's') return false;
    if (prev == 'y') return true;  // analys(e)
    return is_vowel(prev);         // caus(e) us(e) promis(e)
  }
  if (last == 'l') {
    if (prev == 'l' || prev == 'r' || prev == 'w') return false;
    if (!is_vowel(prev)) return true;  // settl(e) handl(e)
    if ((prev == 'i' || prev == 'o' || prev == 'u') && n >= 3 && cons(n - 3)) return true;  // compil(e) consol(e) schedul(e)
  }
  if (last == 'r' && n >= 3) {
    if (prev == 'a' || prev == 'i' || prev == 'u') {
      if (cons(n - 3)) return true;  // declar(e) requir(e) secur(e)
    }
  }
  if (last == 't' && n >= 3) {
    if ((prev == 'a' || prev == 'u' || prev == 'o') && cons(n - 3)) return true;  // execut(e) vot(e)
    if (prev == 'a' && n >= 5 && s[n - 3] == 'i') return true;  // negotiat(e)
  }
  if (last == 'd' && n >= 3) {
    if (is_vowel(prev) && prev != 'e' && cons(n - 3)) return true;  // decid(e) trad(e) includ(e)
  }
  if ((last == 'b' || last == 'k' || last == 'p' || last == 'm') && n >= 3) {
    if (is_vowel(prev) && cons(n - 3)) {
      if (last == 'p' && syllables(s) > 1 && prev != 'a') return false;  // develop, worship
      return true;  // describ(e) lik(e) escap(e) assum(e)
    }
  }
  if (last == 'n' && n >= 3 && prev == 'i' && cons(n - 3)) return true;  // declin(e) defin(e)
  if (last == 'h' && prev == 't' && n >= 3 && is_vowel(s[n - 3])) return true;  // breath(e)
  // A monosyllabic CVC stem would have doubled its consonant; it did not,
  // so the citation form ends in "e" ("not" -> "note", "hop" -> "hope").
  if (ends_cvc(s) && syllables(s) == 1) return true;
  if (n == 2 && is_vowel(s[0]) && cons(1) && last != 'w' && last != 'x' && last != 'y') return true;
  return false;
}

bool has_vowel(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!is_consonant_at(s, i)) return true;
  }
  return false;
}

// Candidate citation forms for a stem left after stripping "ed" or "ing".
std::vector<std::string> stem_candidates(std::string_view stem) {
  std::vector<std::string> out;
  auto add = [&out](std::string c) {
    if (!c.empty() && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  };
  std::string s(stem);
  std::size_t n = s.size();
  if (n >= 4 && s[n - 1] == 'k' && s[n - 2] == 'c' && in_list(std::string_view(s).substr(0, n - 1), kAddK)) {
    add(s.substr(0, n - 1));
    return out;
  }
  if (n >= 3 && s[n - 1] == s[n - 2] && !is_vowel(s[n - 1])) {
    std::string undoubled = s.substr(0, n - 1);
    char c = s[n - 1];
    bool keep = in_list(std::string_view(s), kDoubledLemmas) ||
                ((c == 'l' || c == 's' || c == 'z' || c == 'f') && !in_list(std::string_view(undoubled), kStressFinal));
    if (keep) {
      add(s);
      add(undoubled);
    } else {
      add(undoubled);
      add(s);
    }
    return out;
  }
  if (needs_silent_e(s)) {
    add(s + "e");
    add(s);
  } else {
    add(s);
    add(s + "e");
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Morphology

Morphology::Morphology(IrregularTable table) : table_(std::move(table)) {}

const Morphology& Morphology::english() {
  static const Morphology m(IrregularTable::builtin());
  return m;
}

namespace {

struct IrregularNoun {
  std::string_view plural;
  std::string_view singular;
};
constexpr IrregularNoun kIrregularNouns[] = {
    {"men", "man"},         {"women", "woman"},   {"children", "child"}, {"feet", "foot"},
    {"teeth", "tooth"},     {"mice", "mouse"},    {"geese", "goose"},    {"oxen", "ox"},
    {"businessmen", "businessman"}, {"spokesmen", "spokesman"}, {"chairmen", "chairman"},
    {"congressmen", "congressman"}, {"analyses", "analysis"}, {"crises", "crisis"},
    {"theses", "thesis"},   {"criteria", "criterion"}, {"phenomena", "phenomenon"}};

constexpr std::string_view kBeForms[] = {"am", "is", "are", "was", "were", "been", "being",
                                         "'s", "'re", "'m", "be"};

}  // namespace

std::vector<std::string> Morphology::verb_candidates(std::string_view w, std::string_view tag) const {
  std::vector<std::string> out;
  auto add = [&out](std::string c) {
    if (!c.empty() && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  };
  auto add_all = [&](const std::vector<std::string>& cs) {
    for (const auto& c : cs) add(c);
  };

  if (tag == "MD") {
    if (w == "wo" || w == "'ll") add("will");
    else if (w == "ca") add("can");
    else if (w == "'d") add("would");
    else if (w == "sha") add("shall");
    else add(std::string(w));
    return out;
  }
  if (std::find(std::begin(kBeForms), std::end(kBeForms), w) != std::end(kBeForms) && w != "'s") {
    add("be");
    return out;
  }
  if (w == "'s") {
    add(tag == "VBZ" ? "be" : std::string(w));
    return out;
  }
  if (w == "'ve") {
    add("have");
    return out;
  }

  auto form = verb_form_of_tag(tag);
  if (form == VerbForm::Past || form == VerbForm::PastParticiple) {
    auto primary = form == VerbForm::Past ? table_.lemma_of_past(w) : table_.lemma_of_participle(w);
    auto secondary = form == VerbForm::Past ? table_.lemma_of_participle(w) : table_.lemma_of_past(w);
    if (primary) add(*primary);
    if (secondary && !primary) add(*secondary);
    if (!out.empty()) return out;
    if (table_.find(w)) {  // citation form already ("put", "beat" as lemma)
      add(std::string(w));
      return out;
    }
    if (ends_with(w, "ied") && w.size() > 4) {
      add(std::string(w.substr(0, w.size() - 3)) + "y");
    } else if (ends_with(w, "ied") || ends_with(w, "eed")) {
      add(std::string(w.substr(0, w.size() - 1)));  // died -> die, agreed -> agree
    } else if (ends_with(w, "ed") && w.size() > 3 && has_vowel(w.substr(0, w.size() - 2))) {
      add_all(stem_candidates(w.substr(0, w.size() - 2)));
    }
    add(std::string(w));
    return out;
  }
  if (form == VerbForm::Present3sg) {
    if (auto l = table_.lemma_of_3sg(w)) {
      add(*l);
      return out;
    }
    std::size_t n = w.size();
    if (ends_with(w, "ies") && n > 4) {
      add(std::string(w.substr(0, n - 3)) + "y");
    } else if (ends_with(w, "sses") || ends_with(w, "shes") || ends_with(w, "ches") ||
               ends_with(w, "xes") || ends_with(w, "zzes") || (ends_with(w, "oes") && n > 4)) {
      add(std::string(w.substr(0, n - 2)));
    } else if (n > 2 && w.back() == 's' && w[n - 2] != 's' && w[n - 2] != 'u' && w[n - 2] != 'i') {
      add(std::string(w.substr(0, n - 1)));
    }
    if (ends_with(w, "es") && n > 3) {
      std::string bare(w.substr(0, n - 2));
      if (in_list(std::string_view(bare), kNoSilentEStems)) out.insert(out.begin(), bare);
      else add(bare);
    }
    add(std::string(w));
    return out;
  }
  if (form == VerbForm::Gerund) {
    if (ends_with(w, "ing") && w.size() > 4 && has_vowel(w.substr(0, w.size() - 3))) {
      std::string_view stem = w.substr(0, w.size() - 3);
      if (stem.size() <= 2 && ends_with(stem, "y")) {
        add(std::string(stem.substr(0, stem.size() - 1)) + "ie");  // dying -> die
      } else {
        add_all(stem_candidates(stem));
      }
    }
    add(std::string(w));
    return out;
  }
  add(std::string(w));
  return out;
}

std::vector<std::string> Morphology::lemma_candidates(std::string_view word, std::string_view pos) const {
  std::string w = detail::to_lower(word);
  if (is_verb_tag(pos)) return verb_candidates(w, pos);

  std::vector<std::string> out;
  auto add = [&out](std::string c) {
    if (!c.empty() && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  };
  std::size_t n = w.size();

  if (is_noun_tag(pos)) {
    if (pos == "NNS") {
      for (const auto& irr : kIrregularNouns) {
        if (w == irr.plural) add(std::string(irr.singular));
      }
      if (ends_with(w, "ies") && n > 4) {
        add(w.substr(0, n - 3) + "y");
        add(w.substr(0, n - 1));
      } else if (ends_with(w, "sses") || ends_with(w, "shes") || ends_with(w, "ches") ||
                 ends_with(w, "xes") || ends_with(w, "zzes")) {
        add(w.substr(0, n - 2));
        add(w.substr(0, n - 1));
      } else if (ends_with(w, "oes") && n > 4) {
        add(w.substr(0, n - 1));
        add(w.substr(0, n - 2));
      } else if (n > 2 && w.back() == 's' && w[n - 2] != 's' && w[n - 2] != 'u' && w[n - 2] != 'i') {
        add(w.substr(0, n - 1));
      }
    }
    add(w);
    return out;
  }
  if (is_adjective_tag(pos) || is_adverb_tag(pos)) {
    bool comparative = pos == "JJR" || pos == "RBR";
    bool superlative = pos == "JJS" || pos == "RBS";
    if (comparative || superlative) {
      if (w == "better" || w == "best") add(is_adverb_tag(pos) ? "well" : "good");
      if (w == "worse" || w == "worst") add("bad");
      if (w == "more" || w == "most") add("much");
      if (w == "less" || w == "least") add("little");
      std::string_view suffix = comparative ? "er" : "est";
      if (out.empty() && ends_with(w, suffix) && n > suffix.size() + 2) {
        std::string_view stem = std::string_view(w).substr(0, n - suffix.size());
        if (ends_with(stem, "i")) {
          add(std::string(stem.substr(0, stem.size() - 1)) + "y");  // happier -> happy
        } else if (stem.size() >= 3 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
                   !is_vowel(stem.back()) && stem.back() != 'l' && stem.back() != 's') {
          add(std::string(stem.substr(0, stem.size() - 1)));  // bigger -> big
        } else if (needs_silent_e(stem)) {
          add(std::string(stem) + "e");  // larger -> large
          add(std::string(stem));
        } else {
          add(std::string(stem));
          add(std::string(stem) + "e");
        }
      }
    }
    add(w);
    return out;
  }
  fail(ErrorCode::UnknownPOS, std::string(pos));
}

std::string Morphology::lemmatize(std::string_view word, std::string_view pos) const {
  auto c = lemma_candidates(word, pos);
  return c.front();
}

std::string Morphology::inflect_verb(std::string_view lemma_in, VerbForm form) const {
  std::string lemma = detail::to_lower(lemma_in);
  if (lemma == "be") {
    switch (form) {
      case VerbForm::Base: return "be";
      case VerbForm::Past: return "was";
      case VerbForm::PastParticiple: return "been";
      case VerbForm::Present3sg: return "is";
      case VerbForm::PresentNon3sg: return "are";
      case VerbForm::Gerund: return "being";
    }
  }
  if (form == VerbForm::Base || form == VerbForm::PresentNon3sg) return lemma;
  if (const IrregularForms* irr = table_.find(lemma)) {
    if (form == VerbForm::Past) return irr->past;
    if (form == VerbForm::PastParticiple) return irr->past_participle;
    if (form == VerbForm::Present3sg) return irr->present_3sg;
  }
  std::size_t n = lemma.size();
  if (n == 0) return lemma;
  char last = lemma.back();
  bool consonant_y = last == 'y' && n >= 2 && !is_vowel(lemma[n - 2]);

  if (form == VerbForm::Present3sg) {
    if (ends_with(lemma, "s") || ends_with(lemma, "x") || ends_with(lemma, "z") ||
        ends_with(lemma, "ch") || ends_with(lemma, "sh"))
      return lemma + "es";
    if (last == 'o' && n >= 2 && !is_vowel(lemma[n - 2])) return lemma + "es";
    if (consonant_y) return lemma.substr(0, n - 1) + "ies";
    return lemma + "s";
  }
  if (form == VerbForm::Past || form == VerbForm::PastParticiple) {
    if (last == 'e') return lemma + "d";
    if (consonant_y) return lemma.substr(0, n - 1) + "ied";
    if (in_list(std::string_view(lemma), kAddK)) return lemma + "ked";
    if (doubles_final_consonant(lemma)) return lemma + last + "ed";
    return lemma + "ed";
  }
  // Gerund
  if (ends_with(lemma, "ie")) return lemma.substr(0, n - 2) + "ying";
  if (last == 'e' && n >= 2 && lemma[n - 2] != 'e' && lemma[n - 2] != 'y' && lemma[n - 2] != 'o')
    return lemma.substr(0, n - 1) + "ing";
  if (in_list(std::string_view(lemma), kAddK)) return lemma + "king";
  if (doubles_final_consonant(lemma)) return lemma + last + "ing";
  return lemma + "ing";
}

std::string Morphology::finite_verb(std::string_view lemma, Tense tense, Agreement agreement) const {
  if (tense == Tense::Future) return "will";
  if (lemma == "be") {
    if (tense == Tense::Past) return agreement == Agreement::Other ? "were" : "was";
    if (agreement == Agreement::FirstSingular) return "am";
    return agreement == Agreement::ThirdSingular ? "is" : "are";
  }
  if (tense == Tense::Past) return inflect_verb(lemma, VerbForm::Past);
  return inflect_verb(lemma, agreement == Agreement::ThirdSingular ? VerbForm::Present3sg
                                                                   : VerbForm::PresentNon3sg);
}

std::string Morphology::pluralize_noun(std::string_view lemma_in) const {
  std::string lemma(lemma_in);
  for (const auto& irr : kIrregularNouns) {
    if (lemma == irr.singular) return std::string(irr.plural);
  }
  std::size_t n = lemma.size();
  if (n == 0) return lemma;
  if (ends_with(lemma, "s") || ends_with(lemma, "x") || ends_with(lemma, "z") ||
      ends_with(lemma, "ch") || ends_with(lemma, "sh"))
    return lemma + "es";
  if (lemma.back() == 'y' && n >= 2 && !is_vowel(lemma[n - 2])) return lemma.substr(0, n - 1) + "ies";
  return lemma + "s";
}

// ---------------------------------------------------------------------------
// Noun phrases

namespace {

constexpr std::string_view kPluralPronouns[] = {"we", "they", "us", "them", "you", "ourselves",
                                                "themselves", "yourselves"};

bool is_conjunction(const ParseTree& t) {
  return t.is_preterminal() && t.label == "CC";
}

}  // namespace

Number np_number(const ParseTree& np) {
  if (np.category() != "NP" && np.category() != "NX" && np.category() != "NML")
    fail(ErrorCode::NoHeadNoun, "not a noun phrase: " + np.label);
  std::size_t np_children = 0;
  bool has_cc = false;
  for (const auto& c : np.children) {
    if (!c.is_preterminal() && (c.category() == "NP" || c.category() == "NX")) ++np_children;
    if (is_conjunction(c)) has_cc = true;
  }
  if (has_cc && np_children >= 2) return Number::Plural;

  for (auto it = np.children.rbegin(); it != np.children.rend(); ++it) {
    if (!it->is_preterminal()) continue;
    const std::string& tag = it->label;
    if (tag == "NNS" || tag == "NNPS") return Number::Plural;
    if (tag == "NN" || tag == "NNP") return Number::Singular;
    if (tag == "PRP") {
      std::string w = detail::to_lower(*it->word);
      bool plural = std::find(std::begin(kPluralPronouns), std::end(kPluralPronouns), w) !=
                    std::end(kPluralPronouns);
      return plural ? Number::Plural : Number::Singular;
    }
  }
  for (const auto& c : np.children) {
    if (!c.is_preterminal() && (c.category() == "NP" || c.category() == "NX" || c.category() == "NML"))
      return np_number(c);
  }
  fail(ErrorCode::NoHeadNoun, "no noun or pronoun head");
}

Agreement subject_agreement(const ParseTree& np) {
  if (np.children.size() == 1 && np.children.front().is_preterminal() &&
      np.children.front().label == "PRP") {
    std::string w = detail::to_lower(*np.children.front().word);
    if (w == "i") return Agreement::FirstSingular;
  }
  try {
    return np_number(np) == Number::Plural ? Agreement::Other : Agreement::ThirdSingular;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoHeadNoun) throw;
    return Agreement::ThirdSingular;
  }
}

namespace {

struct CasePair {
  std::string_view subjective;
  std::string_view objective;
};
constexpr CasePair kCases[] = {
    {"he", "him"}, {"she", "her"}, {"they", "them"}, {"we", "us"}, {"i", "me"}};

}  // namespace

std::string to_objective_case(std::string_view pronoun) {
  std::string w = detail::to_lower(pronoun);
  for (const auto& c : kCases) {
    if (w == c.subjective) return std::string(c.objective);
  }
  return std::string(pronoun);
}

std::string to_subjective_case(std::string_view pronoun) {
  std::string w = detail::to_lower(pronoun);
  for (const auto& c : kCases) {
    if (w == c.objective) return std::string(c.subjective);
  }
  return std::string(pronoun);
}

}  // namespace finestyle
