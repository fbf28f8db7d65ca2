#include "hopflab/rational.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "hopflab/errors.hpp"

namespace hopf {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view s) {
  std::string str(s);
  while (!str.empty() && std::isspace(static_cast<unsigned char>(str.back()))) str.pop_back();
  size_t b = 0;
  while (b < str.size() && std::isspace(static_cast<unsigned char>(str[b]))) ++b;
  str = str.substr(b);
  if (str.empty()) throw UsageError("empty number");
  auto digits_ok = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = str.find('/');
  if (slash != std::string::npos) {
    std::string n = str.substr(0, slash), d = str.substr(slash + 1);
    if (!digits_ok(n, true) || !digits_ok(d, false)) throw UsageError("bad rational: " + str);
    if (n[0] == '+') n = n.substr(1);
    return Rational(mpz_class(n), mpz_class(d));
  }
  auto dot = str.find('.');
  if (dot != std::string::npos) {
    std::string ip = str.substr(0, dot), fp = str.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
    if (ip.empty()) ip = "0";
    if (!digits_ok(ip, false) || (!fp.empty() && !digits_ok(fp, false)))
      throw UsageError("bad decimal: " + str);
    mpz_class scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    mpz_class n = mpz_class(ip) * scale + (fp.empty() ? mpz_class(0) : mpz_class(fp));
    if (neg) n = -n;
    return Rational(n, scale);
  }
  if (!digits_ok(str, true)) throw UsageError("bad number: " + str);
  if (str[0] == '+') str = str.substr(1);
  return Rational(mpz_class(str));
}

Rational pow(const Rational& r, int e) {
  if (e < 0) return pow(Rational(1) / r, -e);
  Rational out(1), b = r;
  while (e) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get().get_num_mpz_t(), r.get().get_den_mpz_t());
  return Rational(q);
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  mpz_class n = r.num(), d = r.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(sn, sd);
}

namespace {

// Factor |n| into (prime, exponent) pairs; a large unfactored cofactor is kept whole.
std::vector<std::pair<mpz_class, int>> factor(mpz_class n) {
  std::vector<std::pair<mpz_class, int>> out;
  if (n < 0) n = -n;
  auto take = [&](const mpz_class& p) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  };
  take(2);
  for (unsigned long p = 3; p < 1000000; p += 2) {
    mpz_class pp(p);
    if (pp * pp > n) break;
    take(pp);
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      mpz_class s;
      mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
      out.push_back({s, 2});
    } else {
      out.push_back({n, 1});
    }
  }
  return out;
}

}  // namespace

std::vector<mpz_class> odd_prime_factors(const mpz_class& n) {
  std::vector<mpz_class> out;
  for (auto& [p, e] : factor(n))
    if (e % 2) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

SquareFreeSplit square_free_split(const Rational& r) {
  // sqrt(a/b) = sqrt(a*b)/b
  mpz_class ab = r.num() * r.den();
  mpz_class s = 1, d = ab < 0 ? -1 : 1;
  for (auto& [p, e] : factor(ab)) {
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) d *= p;
  }
  return {Rational(s, r.den()), d};
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_between(hi, lo);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);
  Rational fl = floor(lo);
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return fl + 1;
  return fl + Rational(1) / simplest_between(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
}

}  // namespace hopf
