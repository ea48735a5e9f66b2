#include "hankel/literals.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "hankel/errors.hpp"

namespace hankel {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected identifier");
    return std::string(s_.substr(start, pos_ - start));
  }
  double number() {
    skip_ws();
    double v = 0.0;
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    // from_chars rejects a leading '+'; accept it for convenience.
    if (begin != end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || !std::isfinite(v)) fail("expected finite number");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

// key=value list with the allowed keys; duplicates and unknown keys are errors.
std::map<std::string, double> parse_params(Cursor& c, const std::vector<std::string>& allowed) {
  std::map<std::string, double> out;
  do {
    const std::size_t at = c.pos();
    std::string key = c.identifier();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ParseError("unknown parameter '" + key + "'", at);
    if (out.count(key)) throw ParseError("duplicate parameter '" + key + "'", at);
    c.expect('=');
    out[key] = c.number();
  } while (c.accept(','));
  return out;
}

double require(const std::map<std::string, double>& params, const std::string& key, std::size_t pos) {
  auto it = params.find(key);
  if (it == params.end()) throw ParseError("missing parameter '" + key + "'", pos);
  return it->second;
}

template <class F>
auto construct(F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid value: ") + e.what(), 0);
  }
}

}  // namespace

Measure parse_measure(std::string_view text) {
  Cursor c(text);
  const std::string head = c.identifier();
  if (head == "lebesgue") {
    if (!c.at_end()) c.fail("trailing characters");
    return Measure::lebesgue();
  }
  if (head == "atomic") {
    c.expect(':');
    c.expect('[');
    std::vector<Atom> atoms;
    if (!c.accept(']')) {
      do {
        c.expect('(');
        const double t = c.number();
        c.expect(',');
        const double w = c.number();
        c.expect(')');
        atoms.push_back({t, w});
      } while (c.accept(','));
      c.expect(']');
    }
    if (!c.at_end()) c.fail("trailing characters");
    return construct([&] { return Measure::atomic(atoms); });
  }
  if (head == "density") {
    c.expect(':');
    const std::size_t at = c.pos();
    auto params = parse_params(c, {"gamma", "delta", "c"});
    if (!c.at_end()) c.fail("trailing characters");
    const double g = require(params, "gamma", at);
    const double d = params.count("delta") ? params["delta"] : 0.0;
    const double w = params.count("c") ? params["c"] : 1.0;
    return construct([&] { return Measure::density(g, d, w); });
  }
  throw ParseError("unknown measure kind '" + head + "'", 0);
}

SpaceSpec parse_space(std::string_view text) {
  Cursor c(text);
  const std::string head = c.identifier();
  auto finish = [&](SpaceSpec s) {
    if (!c.at_end()) c.fail("trailing characters");
    construct([&] {
      s.validate();
      return 0;
    });
    return s;
  };
  if (head == "bloch") return finish(SpaceSpec::bloch());
  c.expect(':');
  const std::size_t at = c.pos();
  if (head == "hardy") {
    auto p = parse_params(c, {"p"});
    return finish(SpaceSpec::hardy(require(p, "p", at)));
  }
  if (head == "bergman" || head == "dirichlet") {
    auto p = parse_params(c, {"p", "alpha"});
    const double pp = require(p, "p", at), a = require(p, "alpha", at);
    return finish(head == "bergman" ? SpaceSpec::bergman(pp, a) : SpaceSpec::dirichlet(pp, a));
  }
  if (head == "logbloch" || head == "logbergman1" || head == "logdirichlet1") {
    auto p = parse_params(c, {"gamma"});
    const double g = require(p, "gamma", at);
    if (head == "logbloch") return finish(SpaceSpec::log_bloch(g));
    if (head == "logbergman1") return finish(SpaceSpec::log_bergman1(g));
    return finish(SpaceSpec::log_dirichlet1(g));
  }
  throw ParseError("unknown space kind '" + head + "'", 0);
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string to_literal(const Measure& m) {
  if (m.is_lebesgue()) return "lebesgue";
  if (const auto* a = m.as_atomic()) {
    std::string s = "atomic:[";
    for (std::size_t i = 0; i < a->atoms.size(); ++i) {
      if (i) s += ',';
      s += '(' + format_double(a->atoms[i].t) + ',' + format_double(a->atoms[i].c) + ')';
    }
    return s + ']';
  }
  const auto* d = m.as_density();
  return "density:gamma=" + format_double(d->gamma) + ",delta=" + format_double(d->delta) +
         ",c=" + format_double(d->c);
}

std::string to_literal(const SpaceSpec& s) {
  switch (s.kind) {
    case SpaceKind::Hardy:
      return "hardy:p=" + format_double(s.p);
    case SpaceKind::Bergman:
      return "bergman:p=" + format_double(s.p) + ",alpha=" + format_double(s.alpha);
    case SpaceKind::Dirichlet:
      return "dirichlet:p=" + format_double(s.p) + ",alpha=" + format_double(s.alpha);
    case SpaceKind::Bloch:
      return "bloch";
    case SpaceKind::LogBloch:
      return "logbloch:gamma=" + format_double(s.gamma);
    case SpaceKind::LogBergman1:
      return "logbergman1:gamma=" + format_double(s.gamma);
    case SpaceKind::LogDirichlet1:
      return "logdirichlet1:gamma=" + format_double(s.gamma);
  }
  return {};
}

}  // namespace hankel
