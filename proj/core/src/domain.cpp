#include "pathgen/domain.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>

#include "pathgen/errors.hpp"

namespace pathgen {

namespace {

constexpr double kIntBoundLimit = 9007199254740992.0;  // 2^53

class DomainScanner {
 public:
  explicit DomainScanner(std::string_view text) : text_(text) {}

  InputBox run() {
    InputBox box;
    skip_ws();
    if (done()) fail("empty domain spec");
    for (;;) {
      box.dims.push_back(read_var());
      skip_ws();
      if (done()) break;
      expect_char(';');
      skip_ws();
    }
    for (std::size_t i = 0; i < box.dims.size(); ++i) {
      for (std::size_t j = i + 1; j < box.dims.size(); ++j) {
        if (box.dims[i].name == box.dims[j].name) {
          fail("duplicate variable '" + box.dims[i].name + "'");
        }
      }
    }
    return box;
  }

 private:
  VarDomain read_var() {
    VarDomain v;
    int name_line = line_, name_col = col_;
    v.name = read_ident();
    (void)name_line;
    (void)name_col;
    skip_ws();
    expect_char(':');
    skip_ws();
    int kind_line = line_, kind_col = col_;
    std::string kind = read_ident();
    if (kind == "int") {
      v.kind = VarKind::Int;
    } else if (kind == "real") {
      v.kind = VarKind::Real;
    } else {
      throw ParseError(kind_line, kind_col,
                       "unknown kind '" + kind + "' (expected int or real)");
    }
    skip_ws();
    expect_char(':');
    skip_ws();
    v.lo = read_number();
    skip_ws();
    expect_char('.');
    expect_char('.');
    skip_ws();
    v.hi = read_number();
    if (v.lo > v.hi) fail("lo exceeds hi for variable '" + v.name + "'");
    if (v.kind == VarKind::Int) {
      for (double b : {v.lo, v.hi}) {
        if (!(std::nearbyint(b) == b) || std::fabs(b) > kIntBoundLimit) {
          fail("int variable '" + v.name + "' needs integer bounds");
        }
      }
    } else {
      if (!std::isfinite(v.lo) || !std::isfinite(v.hi)) {
        fail("real variable '" + v.name + "' needs finite bounds");
      }
    }
    return v;
  }

  std::string read_ident() {
    if (done() || !(std::isalpha(static_cast<unsigned char>(cur())) || cur() == '_')) {
      fail("expected identifier");
    }
    std::size_t start = pos_;
    while (!done() && (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_')) {
      advance();
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  double read_number() {
    std::size_t start = pos_;
    int nline = line_, ncol = col_;
    if (!done() && (cur() == '-' || cur() == '+')) advance();
    std::size_t digits = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(cur()))) {
      advance();
      ++digits;
    }
    // A '.' only starts a fraction if not followed by another '.',
    // which would be the range separator.
    if (!done() && cur() == '.' && !(pos_ + 1 < text_.size() && text_[pos_ + 1] == '.')) {
      advance();
      while (!done() && std::isdigit(static_cast<unsigned char>(cur()))) {
        advance();
        ++digits;
      }
    }
    if (digits == 0) throw ParseError(nline, ncol, "expected number");
    if (!done() && (cur() == 'e' || cur() == 'E')) {
      advance();
      if (!done() && (cur() == '-' || cur() == '+')) advance();
      std::size_t exp_digits = 0;
      while (!done() && std::isdigit(static_cast<unsigned char>(cur()))) {
        advance();
        ++exp_digits;
      }
      if (exp_digits == 0) fail("expected digits in exponent");
    }
    std::string_view lit = text_.substr(start, pos_ - start);
    double value = 0.0;
    auto res = std::from_chars(lit.data(), lit.data() + lit.size(), value);
    if (res.ec != std::errc() || res.ptr != lit.data() + lit.size()) {
      throw ParseError(nline, ncol, "invalid number '" + std::string(lit) + "'");
    }
    return value;
  }

  void expect_char(char c) {
    if (done() || cur() != c) {
      fail(std::string("expected '") + c + "'");
    }
    advance();
  }

  void skip_ws() {
    while (!done() && (cur() == ' ' || cur() == '\t' || cur() == '\r' || cur() == '\n')) {
      advance();
    }
  }

  bool done() const { return pos_ >= text_.size(); }
  char cur() const { return text_[pos_]; }

  void advance() {
    if (cur() == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col_, msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

const VarDomain* InputBox::find(std::string_view name) const {
  for (const auto& d : dims) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

InputBox parse_domain(std::string_view text) {
  return DomainScanner(text).run();
}

std::string format_domain(const InputBox& box) {
  std::string out;
  for (std::size_t i = 0; i < box.dims.size(); ++i) {
    const VarDomain& d = box.dims[i];
    if (i) out += ';';
    out += d.name;
    out += d.kind == VarKind::Int ? ":int:" : ":real:";
    out += format_double(d.lo);
    out += "..";
    out += format_double(d.hi);
  }
  return out;
}

Valuation sample_uniform(const InputBox& box, RandomStream& rng) {
  Valuation v;
  for (const auto& d : box.dims) {
    double x;
    if (d.kind == VarKind::Int) {
      x = static_cast<double>(rng.next_int(static_cast<std::int64_t>(d.lo),
                                           static_cast<std::int64_t>(d.hi)));
    } else {
      x = rng.next_real(d.lo, d.hi);
    }
    v.emplace(d.name, x);
  }
  return v;
}

bool contains(const InputBox& box, const Valuation& v) {
  for (const auto& d : box.dims) {
    auto it = v.find(d.name);
    if (it == v.end()) return false;
    if (!(it->second >= d.lo && it->second <= d.hi)) return false;
    if (d.kind == VarKind::Int && std::nearbyint(it->second) != it->second) return false;
  }
  return true;
}

}  // namespace pathgen
