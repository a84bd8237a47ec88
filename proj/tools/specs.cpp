#include "specs.hpp"

#include "report.hpp"
#include "refl/ez_forms.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

namespace refl::cli {

namespace {

std::string strip_spaces(const std::string& text) {
  std::string out;
  std::copy_if(text.begin(), text.end(), std::back_inserter(out),
               [](unsigned char c) { return !std::isspace(c); });
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return value;
}

IntegerLattice parse_lattice_term(const std::string& term) {
  std::size_t digits = 0;
  while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
  int count = 1;
  if (digits > 0) {
    const auto c = parse_int(std::string_view(term).substr(0, digits));
    if (!c || *c < 1) throw UsageError("bad multiplicity in lattice term '" + term + "'");
    count = *c;
  }
  const std::string name = term.substr(digits);
  std::optional<IntegerLattice> one;
  if (name == "E8") {
    one = build_named(LatticeFamily::E8, 8);
  } else if (name.size() >= 3 && name.front() == '<' && name.back() == '>') {
    const auto v = parse_int(std::string_view(name).substr(1, name.size() - 2));
    if (!v || *v < 2 || *v % 2 != 0) throw UsageError("rank-one lattice needs a positive even norm: '" + name + "'");
    one = build_named(LatticeFamily::rank1, *v / 2);
  } else if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'D')) {
    const auto n = parse_int(std::string_view(name).substr(1));
    if (!n || *n < 1 || (name[0] == 'D' && *n < 4) || *n > 64)
      throw UsageError("unsupported root lattice '" + name + "'");
    one = build_named(name[0] == 'A' ? LatticeFamily::A : LatticeFamily::D, *n);
  } else {
    throw UsageError("unknown lattice '" + name + "'");
  }
  IntegerLattice out = *one;
  for (int i = 1; i < count; ++i) out = direct_sum(out, *one);
  return out;
}

struct Token {
  enum class Kind { operand, times, tensor, over_delta } kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& raw) {
  static const std::vector<std::string> names = {"thetaE8", "phim21", "phi01", "Delta", "E41", "E4", "E6", "G2"};
  const std::string s = strip_spaces(raw);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '*') {
      out.push_back({Token::Kind::times, "*"});
      ++i;
      continue;
    }
    if (s[i] == '/') {
      if (s.compare(i + 1, 5, "Delta") != 0) throw UsageError("only '/Delta' may follow '/'");
      out.push_back({Token::Kind::over_delta, "/Delta"});
      i += 6;
      continue;
    }
    if (s.compare(i, 7, "thetaL(") == 0) {
      const std::size_t close = s.find(')', i);
      if (close == std::string::npos) throw UsageError("unterminated thetaL(");
      out.push_back({Token::Kind::operand, s.substr(i, close + 1 - i)});
      i = close + 1;
      continue;
    }
    const auto hit = std::find_if(names.begin(), names.end(), [&](const std::string& n) { return s.compare(i, n.size(), n) == 0; });
    if (hit != names.end()) {
      out.push_back({Token::Kind::operand, *hit});
      i += hit->size();
      continue;
    }
    if (s[i] == 'x') {
      out.push_back({Token::Kind::tensor, "x"});
      ++i;
      continue;
    }
    throw UsageError("unexpected input at '" + s.substr(i) + "'");
  }
  return out;
}

FormValue build_operand(const std::string& name, int N) {
  if (name == "E4") return eisenstein(EisensteinKind::E4, N);
  if (name == "E6") return eisenstein(EisensteinKind::E6, N);
  if (name == "G2") return eisenstein(EisensteinKind::G2, N);
  if (name == "Delta") return delta(N);
  if (name == "phi01") return ez_generator(EzGenerator::phi_0_1, N);
  if (name == "phim21") return ez_generator(EzGenerator::phi_m2_1, N);
  if (name == "E41") return ez_generator(EzGenerator::E_4_1, N);
  if (name == "thetaE8") return theta_series(build_named(LatticeFamily::E8, 8), N);
  return theta_series(parse_lattice(name.substr(7, name.size() - 8)), N);
}

FormValue apply(Token::Kind op, const FormValue& a, const FormValue& b) {
  const auto* qa = std::get_if<QSeries>(&a);
  const auto* qb = std::get_if<QSeries>(&b);
  if (op == Token::Kind::tensor) {
    if (qa || qb) throw UsageError("'x' needs Jacobi forms on both sides; use '*' for scalars");
    return tensor(std::get<JacobiExpansion>(a), std::get<JacobiExpansion>(b));
  }
  if (qa && qb) return *qa * *qb;
  if (qa) return mul_scalar(std::get<JacobiExpansion>(b), *qa);
  if (qb) return mul_scalar(std::get<JacobiExpansion>(a), *qb);
  const auto& ja = std::get<JacobiExpansion>(a);
  const auto& jb = std::get<JacobiExpansion>(b);
  if (ja.index().gram() != jb.index().gram()) throw UsageError("'*' of two Jacobi forms needs equal indices");
  return product(ja, jb);
}

}  // namespace

IntegerLattice parse_lattice(const std::string& text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw UsageError("empty lattice name");
  std::optional<IntegerLattice> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t plus = s.find('+', start);
    const std::string term = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (term.empty()) throw UsageError("empty term in lattice name '" + text + "'");
    IntegerLattice t = parse_lattice_term(term);
    out = out ? direct_sum(*out, t) : t;
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return *out;
}

FormValue evaluate_form(const std::string& spec, int trunc) {
  if (trunc < 2) throw UsageError("--trunc must be at least 2");
  const std::vector<Token> tokens = tokenize(spec);
  if (tokens.empty()) throw UsageError("empty form spec");
  const int poles = static_cast<int>(std::count_if(tokens.begin(), tokens.end(),
                                                   [](const Token& t) { return t.kind == Token::Kind::over_delta; }));
  const int N = trunc + poles;

  std::optional<FormValue> acc;
  // operand doubles as "no pending operator"
  Token::Kind pending = Token::Kind::operand;
  for (const Token& t : tokens) {
    switch (t.kind) {
      case Token::Kind::operand: {
        if (acc && pending == Token::Kind::operand) throw UsageError("missing operator before '" + t.text + "'");
        FormValue v = build_operand(t.text, N);
        if (acc)
          acc = apply(pending, *acc, v);
        else
          acc = std::move(v);
        pending = Token::Kind::operand;
        break;
      }
      case Token::Kind::over_delta:
        if (!acc || pending != Token::Kind::operand) throw UsageError("'/Delta' must follow an operand");
        acc = apply(Token::Kind::times, *acc, delta(N, true));
        break;
      default:
        if (!acc || pending != Token::Kind::operand) throw UsageError("operator '" + t.text + "' without a left operand");
        pending = t.kind;
    }
  }
  if (pending != Token::Kind::operand) throw UsageError("form spec ends with an operator");
  if (auto* j = std::get_if<JacobiExpansion>(&*acc); j && j->trunc() > trunc) return j->truncated(trunc);
  if (auto* q = std::get_if<QSeries>(&*acc); q && q->trunc() > trunc) return q->truncated(trunc);
  return *acc;
}

}  // namespace refl::cli
