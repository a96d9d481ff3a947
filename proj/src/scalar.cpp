#include "freeact/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "freeact/error.hpp"

namespace freeact {

bool is_square_free(unsigned long n) {
  if (n == 0) return false;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

Scalar::Scalar(mpq_class rat) : rat_(std::move(rat)) { rat_.canonicalize(); }

Scalar::Scalar(mpq_class rat, mpq_class irr, unsigned long radicand)
    : rat_(std::move(rat)), irr_(std::move(irr)), radicand_(radicand) {
  rat_.canonicalize();
  irr_.canonicalize();
  if (irr_ != 0 && !is_square_free(radicand_)) {
    throw Error(ErrorKind::malformed_scalar,
                "radicand " + std::to_string(radicand_) + " is not square-free");
  }
  canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::malformed_scalar, "zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::sqrt(unsigned long radicand) {
  return Scalar(mpq_class(0), mpq_class(1), radicand);
}

void Scalar::canonicalize() {
  if (radicand_ == 1) {
    rat_ += irr_;
    irr_ = 0;
  }
  if (irr_ == 0) radicand_ = 1;
}

unsigned long Scalar::joint_radicand(const Scalar& other) const {
  if (irr_ == 0) return other.radicand_;
  if (other.irr_ == 0) return radicand_;
  if (radicand_ != other.radicand_) {
    throw Error(ErrorKind::field_mismatch,
                "cannot combine sqrt" + std::to_string(radicand_) + " with sqrt" +
                    std::to_string(other.radicand_));
  }
  return radicand_;
}

Sign Scalar::sign() const {
  const int sp = sgn(rat_);
  const int sq = sgn(irr_);
  if (sq == 0) return static_cast<Sign>(sp);
  if (sp == 0 || sp == sq) return static_cast<Sign>(sq);
  // Opposite signs: compare p^2 with q^2 * D.
  const mpq_class lhs = rat_ * rat_;
  const mpq_class rhs = irr_ * irr_ * radicand_;
  const int c = cmp(lhs, rhs);
  if (c == 0) return Sign::zero;  // unreachable for square-free D > 1
  return static_cast<Sign>(c > 0 ? sp : sq);
}

double Scalar::approx() const {
  return rat_.get_d() + irr_.get_d() * std::sqrt(static_cast<double>(radicand_));
}

std::string Scalar::str() const {
  if (irr_ == 0) return rat_.get_str();
  std::ostringstream os;
  const std::string root = "sqrt" + std::to_string(radicand_);
  if (rat_ != 0) {
    os << rat_.get_str() << (irr_ > 0 ? " + " : " - ");
    const mpq_class mag = abs(irr_);
    if (mag == 1) {
      os << root;
    } else {
      os << mag.get_str() << "*" << root;
    }
  } else if (irr_ == 1) {
    os << root;
  } else if (irr_ == -1) {
    os << "-" << root;
  } else {
    os << irr_.get_str() << "*" << root;
  }
  return os.str();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.rat_ = -r.rat_;
  r.irr_ = -r.irr_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  radicand_ = joint_radicand(other);
  rat_ += other.rat_;
  irr_ += other.irr_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  radicand_ = joint_radicand(other);
  rat_ -= other.rat_;
  irr_ -= other.irr_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  const unsigned long d = joint_radicand(other);
  mpq_class p = rat_ * other.rat_ + irr_ * other.irr_ * d;
  mpq_class q = rat_ * other.irr_ + irr_ * other.rat_;
  rat_ = std::move(p);
  irr_ = std::move(q);
  radicand_ = d;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw Error(ErrorKind::precondition_violated, "division by zero");
  const unsigned long d = joint_radicand(other);
  // x / (p + q r) = x (p - q r) / (p^2 - q^2 D)
  const mpq_class norm = other.rat_ * other.rat_ - other.irr_ * other.irr_ * d;
  Scalar conj(other.rat_, -other.irr_, other.irr_ == 0 ? 1 : d);
  *this *= conj;
  rat_ /= norm;
  irr_ /= norm;
  canonicalize();
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.rat_ == b.rat_ && a.irr_ == b.irr_ && (a.irr_ == 0 || a.radicand_ == b.radicand_);
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.irr_ == 0 && b.irr_ == 0) {
    const int c = cmp(a.rat_, b.rat_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  switch ((a - b).sign()) {
    case Sign::negative: return std::strong_ordering::less;
    case Sign::positive: return std::strong_ordering::greater;
    default: return std::strong_ordering::equal;
  }
}

Sign sign(const Scalar& s) { return s.sign(); }
Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
Scalar abs(const Scalar& s) { return s.sign() == Sign::negative ? -s : s; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) buf_.push_back(c);
    }
  }

  Scalar run() {
    if (buf_.empty()) fail("empty scalar");
    Scalar total;
    bool first = true;
    while (pos_ < buf_.size()) {
      int sgn = 1;
      if (peek() == '+' || peek() == '-') {
        sgn = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Scalar term = parse_term();
      total += sgn < 0 ? -term : term;
      first = false;
    }
    return total;
  }

 private:
  char peek() const { return pos_ < buf_.size() ? buf_[pos_] : '\0'; }
  char get() { return buf_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::malformed_scalar,
                "malformed scalar \"" + buf_ + "\" at position " + std::to_string(pos_) + ": " + why);
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(get());
    return out;
  }

  bool at_sqrt() const { return buf_.compare(pos_, 4, "sqrt") == 0; }

  unsigned long parse_root() {
    pos_ += 4;
    const std::string d = digits();
    if (d.empty()) fail("missing radicand after sqrt");
    return std::stoul(d);
  }

  Scalar parse_term() {
    if (at_sqrt()) return Scalar(mpq_class(0), mpq_class(1), parse_root());
    const std::string num = digits();
    if (num.empty()) fail("expected a number");
    std::string den = "1";
    if (peek() == '/') {
      get();
      den = digits();
      if (den.empty()) fail("missing denominator");
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
    }
    mpq_class value{mpz_class(num), mpz_class(den)};
    value.canonicalize();
    if (peek() == '*') {
      get();
      if (!at_sqrt()) fail("expected sqrt after '*'");
      return Scalar(mpq_class(0), value, parse_root());
    }
    return Scalar(value);
  }

  std::string buf_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).run(); }

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::malformed_word: return "malformed-word";
    case ErrorKind::malformed_scalar: return "malformed-scalar";
    case ErrorKind::field_mismatch: return "field-mismatch";
    case ErrorKind::precondition_violated: return "precondition-violated";
    case ErrorKind::budget_exhausted: return "budget-exhausted";
    case ErrorKind::degenerate_subgroup: return "degenerate-subgroup";
    case ErrorKind::malformed_path: return "malformed-path";
    case ErrorKind::out_of_support: return "out-of-support";
    case ErrorKind::missing_labels: return "missing-labels";
    case ErrorKind::support_mismatch: return "support-mismatch";
    case ErrorKind::invalid_graph: return "invalid-graph";
    case ErrorKind::invalid_system: return "invalid-system";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::schema_mismatch: return "schema-mismatch";
  }
  return "unknown";
}

}  // namespace freeact
