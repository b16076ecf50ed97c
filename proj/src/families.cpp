#include "fermat/families.hpp"

#include <numeric>
#include <stdexcept>

#include "fermat/counted_sets.hpp"
#include "fermat/arith.hpp"
#include "fermat/counting.hpp"

namespace fermat {

namespace {

struct IdName {
  FamilyId id;
  const char* name;
};

constexpr IdName kIdNames[] = {
    {FamilyId::pm1_pp1, "pm1-pp1"},
    {FamilyId::m_phm1, "m-phm1"},
    {FamilyId::p2p1_fermat, "p2p1-fermat"},
    {FamilyId::p2p1_p3m1, "p2p1-p3m1"},
    {FamilyId::half_phm1_fermat, "half-phm1-fermat"},
    {FamilyId::half_phm1_full, "half-phm1-full"},
    {FamilyId::pam1_pbm1, "pam1-pbm1"},
    {FamilyId::char2_coprime_orders, "char2-coprime-orders"},
    {FamilyId::plus1_plus1_zero, "plus1-plus1-zero"},
    {FamilyId::pap1_pbm1_even, "pap1-pbm1-even"},
    {FamilyId::pap1_pbm1_odd, "pap1-pbm1-odd"},
    {FamilyId::char2_plus1_minus1_zero, "char2-plus1-minus1-zero"},
    {FamilyId::hyper_phm1, "hyper-phm1"},
    {FamilyId::hyper_2php1, "hyper-2php1"},
    {FamilyId::hyper_2phm1, "hyper-2phm1"},
    {FamilyId::hyper_p2rpr1, "hyper-p2rpr1"},
    {FamilyId::hyper_2p2rpr1, "hyper-2p2rpr1"},
    {FamilyId::hyper_alternating, "hyper-alternating"},
    {FamilyId::hyper_correction, "hyper-correction"},
    {FamilyId::twisted_odd, "twisted-odd"},
    {FamilyId::twisted_even, "twisted-even"},
    {FamilyId::twisted_php1, "twisted-php1"},
    {FamilyId::odd_cofactor_equal, "odd-cofactor-equal"},
    {FamilyId::dgz, "dgz"},
    {FamilyId::bks, "bks"},
    {FamilyId::pp1_block, "pp1-block"},
};

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::uint64_t need(const std::optional<std::uint64_t>& v, const char* what) {
  if (!v) throw std::invalid_argument(what);
  return *v;
}

unsigned long need_exp(const std::optional<unsigned long>& v, const char* what) {
  if (!v) throw std::invalid_argument(what);
  return *v;
}

void check_exponent(std::uint64_t e) {
  if (e == 0) throw std::invalid_argument("exponent parameter must be positive");
  if (e > 100000) throw std::length_error("exponent parameter too large");
}

Nat fermat_genus(const Nat& m, const Nat& n) {
  Nat d;
  mpz_gcd(d.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
  return div_exact((m - 1) * (n - 1) + 1 - d, 2, "genus");
}

Nat hyper_genus(const Nat& n) {
  return div_exact(n - (n % 2 == 0 ? 2 : 1), 2, "genus");
}

PRankReport make_report(Nat gamma, std::optional<Nat> genus) {
  if (gamma < 0) throw std::logic_error("p-rank fell outside [0, genus]");
  if (genus && gamma > *genus) throw std::logic_error("p-rank fell outside [0, genus]");
  PRankReport rep;
  rep.gamma = std::move(gamma);
  rep.genus = std::move(genus);
  rep.method = Method::closed_form;
  if (rep.genus && *rep.genus == 0) rep.notes = "rational curve";
  return rep;
}

// a >= 1 with p^a + off == n, else 0
unsigned long power_shape(std::uint64_t p, int off, const Nat& n) {
  Nat pw = p;
  for (unsigned long a = 1; a <= 256; ++a) {
    Nat val = off >= 0 ? Nat(pw + 1) : Nat(pw - 1);
    if (val == n) return a;
    if (val > n) return 0;
    pw *= p;
  }
  return 0;
}

// closed correction term for y^2 = x(x^n+1), n even, alpha even; nullopt
// when no closed case applies
std::optional<Nat> twisted_closed_delta(std::uint64_t p, std::uint64_t n, unsigned long h,
                                        const Nat& alpha) {
  const Nat sign = h % 2 == 0 ? 1 : -1;
  std::optional<Nat> found;
  auto put = [&](Nat v) {
    if (found && *found != v) throw std::logic_error("correction rows disagree");
    found = std::move(v);
  };
  if (Nat((p - 1) / 2) % alpha == 0) put(1);
  if (Nat((p + 1) / 2) % alpha == 0) put(0);
  if (Nat((p + 3) / 2) % alpha == 0) {
    bool half_in = (2 * Nat(n)) % (p - 1) == 0;
    bool full_in = Nat(n) % (p - 1) == 0;
    put(half_in && !full_in ? Nat(sign * (1 - alpha)) : sign);
  }
  return found;
}

PRankReport twisted_even_closed(std::uint64_t p, std::uint64_t n, bool allow_machinery) {
  require(n >= 2 && n % 2 == 0, "n must be even");
  require(n % p != 0, "characteristic divides an exponent");
  const unsigned long h = mult_order(p, n);
  const Nat q = nat_pow(p, h);
  const Nat alpha = div_exact(q - 1, n, "alpha");
  if (alpha % 2 == 1) return make_report(0, Nat(n / 2));
  std::optional<Nat> delta = twisted_closed_delta(p, n, h, alpha);
  if (!delta) {
    if (!allow_machinery) throw std::invalid_argument("no closed correction case applies");
    // difference of the two curve corrections at the shared extension degree
    if (!fits_u64(Nat(2) * n)) throw std::length_error("n too large");
    delta = 2 * hyperelliptic_correction(p, 2 * n, h) - hyperelliptic_correction(p, n, h);
  }
  Nat box = nat_pow(Nat((p + 1) / 2), h);
  Nat gamma = div_exact(Nat(n) * (box - *delta), q - 1, "twisted closed form");
  return make_report(std::move(gamma), Nat(n / 2));
}

}  // namespace

const char* family_id_name(FamilyId id) {
  for (const auto& e : kIdNames)
    if (e.id == id) return e.name;
  throw std::logic_error("unknown family id");
}

std::optional<FamilyId> family_id_from_string(std::string_view s) {
  for (const auto& e : kIdNames)
    if (s == e.name) return e.id;
  return std::nullopt;
}

std::vector<FamilyId> all_family_ids() {
  std::vector<FamilyId> out;
  for (const auto& e : kIdNames) out.push_back(e.id);
  return out;
}

PRankReport closed_form(std::uint64_t p, FamilyId id, const FamilyParams& params) {
  if (!is_prime(p)) throw std::invalid_argument("p is not prime");
  switch (id) {
    case FamilyId::pm1_pp1: {
      const std::uint64_t m = need(params.m, "family needs m");
      const std::uint64_t n = need(params.n, "family needs n");
      require(m >= 2 && n >= 2, "exponents must be at least 2");
      require((p - 1) % m == 0, "m must divide p - 1");
      require((p + 1) % n == 0, "n must divide p + 1");
      const std::uint64_t m0 = (p - 1) / m;
      const std::uint64_t n0 = (p + 1) / n;
      const std::uint64_t d = std::gcd(m, n);
      const std::uint64_t hm = (m + 1) / 2;
      Nat sum = 0;
      for (std::uint64_t j = hm; j <= m; ++j) sum += (j * m0 + 1) / n0;
      Nat gamma = 2 * sum - Nat(m - hm + 2) * (n - 1) + 1 - d;
      if (n0 == 1) {  // n = p + 1 display
        Nat disp = m % 2 == 1
                       ? div_exact(Nat(m0) * (m - 1) * (m - 1), 4, "display") + (m - 1) / 2
                       : div_exact(Nat(m0) * m * (m - 2), 4, "display") + (m - 2) / 2;
        if (disp != gamma) throw std::logic_error("special-case display disagrees");
      }
      if (m0 == 1) {  // m = p - 1 display
        Nat disp = n % 2 == 1
                       ? Nat(div_exact(Nat(n0) * (Nat(n) * n - 1), 4, "display") - n + 1)
                       : Nat(div_exact(Nat(n0) * n * n, 4, "display") - n);
        if (disp != gamma) throw std::logic_error("special-case display disagrees");
      }
      return make_report(std::move(gamma), fermat_genus(m, n));
    }
    case FamilyId::m_phm1: {
      const std::uint64_t m = need(params.m, "family needs m");
      const unsigned long h = need_exp(params.h, "family needs h");
      check_exponent(h);
      require(m >= 2, "exponents must be at least 2");
      const Nat q = nat_pow(p, h);
      const Nat n = q - 1;
      require(n % m == 0, "m must divide p^h - 1");
      const Nat beta = div_exact(n, m, "beta");
      Nat gamma = 0;
      for (std::uint64_t j = 1; j < m; ++j) {
        DigitVec digs = base_p_digits(j * beta, p, h);
        Nat prod = 1;
        for (std::uint64_t dg : digs.digits) prod *= dg + 1;
        gamma += prod;
      }
      gamma -= 2 * Nat(m - 1);
      if ((p - 1) % m == 0) {  // m | p - 1 display: all digits of j*beta agree
        Nat disp = 0;
        for (std::uint64_t j = 1; j < m; ++j)
          disp += nat_pow(Nat(j * ((p - 1) / m) + 1), h);
        disp -= 2 * Nat(m - 1);
        if (disp != gamma) throw std::logic_error("special-case display disagrees");
      }
      // d = gcd(m, n) = m here
      Nat genus = div_exact(Nat(m - 1) * (n - 1) + 1 - m, 2, "genus");
      return make_report(std::move(gamma), std::move(genus));
    }
    case FamilyId::p2p1_fermat: {
      const Nat mn = Nat(p) * p + p + 1;
      Nat gamma = div_exact(Nat(p) * (p + 1) * (Nat(p) * p + p + 2), 8, "closed form");
      return make_report(std::move(gamma), fermat_genus(mn, mn));
    }
    case FamilyId::p2p1_p3m1: {
      const Nat m = Nat(p) * p + p + 1;
      const Nat n = nat_pow(p, 3) - 1;
      Nat inner = nat_pow(p, 3) + 2 * Nat(p) * p + 3 * Nat(p) - 14;
      Nat gamma = div_exact(Nat(p) * (p + 1) * inner, 8, "closed form");
      // gcd(m, n) = m since p^3 - 1 = (p - 1)(p^2 + p + 1)
      Nat genus = div_exact((m - 1) * (n - 1) + 1 - m, 2, "genus");
      return make_report(std::move(gamma), std::move(genus));
    }
    case FamilyId::half_phm1_fermat: {
      const unsigned long h = need_exp(params.h, "family needs h");
      check_exponent(h);
      require(p != 2, "p must be odd");
      const Nat q = nat_pow(p, h);
      require(q >= 5, "exponents must be at least 2");
      const Nat m = div_exact(q - 1, 2, "m");
      Nat num = nat_pow(Nat(p) + 1, h) * (q + 3) - 3 * (q - 1) * nat_pow(Nat(2), h + 1);
      Nat gamma = div_exact(num, nat_pow(Nat(2), h + 2), "closed form");
      Nat genus = div_exact((m - 1) * (m - 1) + 1 - m, 2, "genus");
      return make_report(std::move(gamma), std::move(genus));
    }
    case FamilyId::half_phm1_full: {
      const unsigned long h = need_exp(params.h, "family needs h");
      check_exponent(h);
      require(p != 2, "p must be odd");
      const Nat q = nat_pow(p, h);
      require(q >= 5, "exponents must be at least 2");
      const Nat m = div_exact(q - 1, 2, "m");
      const Nat n = q - 1;
      Nat num = nat_pow(Nat(p) + 1, h) * (q + 1) - nat_pow(Nat(2), h + 2) * (q - 1);
      Nat gamma = div_exact(num, nat_pow(Nat(2), h + 1), "closed form");
      Nat genus = div_exact((m - 1) * (n - 1) + 1 - m, 2, "genus");
      return make_report(std::move(gamma), std::move(genus));
    }
    case FamilyId::pam1_pbm1: {
      const std::uint64_t a = need(params.a, "family needs a");
      const std::uint64_t b = need(params.b, "family needs b");
      check_exponent(a);
      check_exponent(b);
      require(nat_pow(p, a) >= 3 && nat_pow(p, b) >= 3, "exponents must be at least 2");
      const std::uint64_t d = std::gcd(a, b);
      SetParams sp;
      sp.which = SetKind::min_box;
      sp.b = p;
      sp.m = a / d;
      sp.n = b / d;
      Nat gamma = nat_pow(closed_count(sp), d) -
                  (nat_pow(p, a) + nat_pow(p, b) + nat_pow(p, d) - 3);
      if (a == b) {
        Nat disp = nat_pow(div_exact(Nat(p) * (p + 1), 2, "display"), a) -
                   3 * (nat_pow(p, a) - 1);
        if (disp != gamma) throw std::logic_error("special-case display disagrees");
      }
      const Nat m = nat_pow(p, a) - 1;
      const Nat n = nat_pow(p, b) - 1;
      Nat genus = div_exact((m - 1) * (n - 1) + 1 - (nat_pow(p, d) - 1), 2, "genus");
      return make_report(std::move(gamma), std::move(genus));
    }
    case FamilyId::char2_coprime_orders: {
      const std::uint64_t m = need(params.m, "family needs m");
      const std::uint64_t n = need(params.n, "family needs n");
      require(p == 2, "family needs p = 2");
      require(m >= 3 && n >= 3 && m % 2 == 1 && n % 2 == 1, "exponents must be odd");
      require(std::gcd(mult_order(2, m), mult_order(2, n)) == 1,
              "orders of 2 must be coprime");
      return make_report(0, fermat_genus(m, n));
    }
    case FamilyId::plus1_plus1_zero: {
      const std::uint64_t m = need(params.m, "family needs m");
      const std::uint64_t n = need(params.n, "family needs n");
      const std::uint64_t u = need(params.u, "family needs u");
      const std::uint64_t v = need(params.v, "family needs v");
      require(m >= 2 && n >= 2, "exponents must be at least 2");
      require(m % p != 0 && n % p != 0, "characteristic divides an exponent");
      if (u > 100000 || v > 100000) throw std::length_error("exponent parameter too large");
      require((nat_pow(p, u) + 1) % m == 0, "m must divide p^u + 1");
      require((nat_pow(p, v) + 1) % n == 0, "n must divide p^v + 1");
      return make_report(0, fermat_genus(m, n));
    }
    case FamilyId::pap1_pbm1_even: {
      const std::uint64_t a = need(params.a, "family needs a");
      const std::uint64_t b = need(params.b, "family needs b");
      check_exponent(a);
      check_exponent(b);
      const std::uint64_t d = std::gcd(a, b);
      require((b / d) % 2 == 0, "b/gcd(a,b) must be even");
      SetParams sp;
      sp.which = SetKind::split_min_box;
      sp.b = p;
      sp.m = a / d;
      sp.n = b / (2 * d);
      Nat gamma = nat_pow(closed_count(sp), d) - (nat_pow(p, a) + nat_pow(p, d));
      const Nat m = nat_pow(p, a) + 1;
      const Nat n = nat_pow(p, b) - 1;
      return make_report(std::move(gamma), fermat_genus(m, n));
    }
    case FamilyId::pap1_pbm1_odd: {
      const std::uint64_t a = need(params.a, "family needs a");
      const std::uint64_t b = need(params.b, "family needs b");
      check_exponent(a);
      check_exponent(b);
      const std::uint64_t d = std::gcd(a, b);
      require((b / d) % 2 == 1, "b/gcd(a,b) must be odd");
      const Nat m = nat_pow(p, a) + 1;
      const Nat n = nat_pow(p, b) - 1;
      require(n >= 2, "exponents must be at least 2");
      if (p == 2) return make_report(0, fermat_genus(m, n));
      SetParams sp;
      sp.which = SetKind::mirror_min_box;
      sp.b = p;
      sp.m = a / d;
      sp.n = b / d;
      Nat gamma = nat_pow(closed_count(sp), d) - (nat_pow(p, a) + 1);
      return make_report(std::move(gamma), fermat_genus(m, n));
    }
    case FamilyId::char2_plus1_minus1_zero: {
      const std::uint64_t m = need(params.m, "family needs m");
      const std::uint64_t n = need(params.n, "family needs n");
      const std::uint64_t u = need(params.u, "family needs u");
      const std::uint64_t v = need(params.v, "family needs v");
      require(p == 2, "family needs p = 2");
      require(m >= 3 && n >= 3, "exponents must be at least 3");
      require(u >= 1 && v >= 1, "family needs u, v >= 1");
      if (u > 100000 || v > 100000) throw std::length_error("exponent parameter too large");
      require((nat_pow(2, u) + 1) % m == 0, "m must divide 2^u + 1");
      require((nat_pow(2, v) - 1) % n == 0, "n must divide 2^v - 1");
      require((v / std::gcd(u, v)) % 2 == 1, "v/gcd(u,v) must be odd");
      return make_report(0, fermat_genus(m, n));
    }
    case FamilyId::hyper_phm1: {
      const unsigned long r = need_exp(params.r, "family needs r");
      check_exponent(r);
      require(p != 2, "p must be odd");
      const Nat n = nat_pow(p, r) - 1;
      Nat gamma = nat_pow(Nat((p + 1) / 2), r) - 2;
      return make_report(std::move(gamma), hyper_genus(n));
    }
    case FamilyId::hyper_2php1: {
      const unsigned long r = need_exp(params.r, "family needs r");
      check_exponent(r);
      require(p != 2, "p must be odd");
      const Nat n = 2 * (nat_pow(p, r) + 1);
      Nat gamma = nat_pow(Nat((p + 1) / 2), r);
      return make_report(std::move(gamma), hyper_genus(n));
    }
    case FamilyId::hyper_2phm1: {
      const unsigned long r = need_exp(params.r, "family needs r");
      check_exponent(r);
      require(p != 2, "p must be odd");
      const Nat n = 2 * (nat_pow(p, r) - 1);
      Nat gamma = nat_pow(Nat((p + 1) / 2), r) - 2;
      return make_report(std::move(gamma), hyper_genus(n));
    }
    case FamilyId::hyper_p2rpr1: {
      const unsigned long r = need_exp(params.r, "family needs r");
      check_exponent(r);
      require(p != 2, "p must be odd");
      const Nat n = nat_pow(p, 2 * r) + nat_pow(p, r) + 1;
      Nat base = div_exact(Nat(p + 3) * ((p + 1) / 2), 4, "closed form");
      Nat gamma = nat_pow(base, r);
      return make_report(std::move(gamma), hyper_genus(n));
    }
    case FamilyId::hyper_2p2rpr1: {
      const unsigned long r = need_exp(params.r, "family needs r");
      check_exponent(r);
      require(p != 2, "p must be odd");
      const Nat n = 2 * (nat_pow(p, 2 * r) + nat_pow(p, r) + 1);
      Nat base = div_exact(Nat(p + 3) * ((p + 1) / 2), 4, "closed form");
      Nat gamma = 2 * nat_pow(base, r);
      return make_report(std::move(gamma), hyper_genus(n));
    }
    case FamilyId::hyper_alternating: {
      const unsigned long r = need_exp(params.r, "family needs r");
      check_exponent(r);
      require(p != 2, "p must be odd");
      const Nat n = nat_pow(p, 3 * r) - nat_pow(p, 2 * r) + nat_pow(p, r) - 1;
      Nat base = div_exact((Nat(p) * p + 2 * Nat(p) + 3) * (p + 1), 12, "closed form");
      Nat gamma = nat_pow(base, r) - 2;
      return make_report(std::move(gamma), hyper_genus(n));
    }
    case FamilyId::hyper_correction: {
      const std::uint64_t n = need(params.n, "family needs n");
      require(p != 2, "p must be odd");
      require(n >= 1 && n % p != 0, "characteristic divides an exponent");
      const unsigned long h = mult_order(p, n);
      const Nat q = nat_pow(p, h);
      const Nat alpha = div_exact(q - 1, n, "alpha");
      const Nat sign = h % 2 == 0 ? 1 : -1;
      std::optional<Nat> delta;
      auto put = [&](Nat v) {
        if (delta && *delta != v) throw std::logic_error("correction rows disagree");
        delta = std::move(v);
      };
      if (Nat((p - 1) / 2) % alpha == 0) {
        if (n % 2 != 0) throw std::logic_error("correction row entails an even n");
        put(alpha + 1);
      }
      if (Nat((p + 1) / 2) % alpha == 0) put(n % 2 == 1 ? Nat(alpha) : Nat(2 * alpha));
      if (Nat((p + 3) / 2) % alpha == 0) {
        if (Nat(n) % (p - 1) != 0) {
          put(n % 2 == 1 ? Nat(alpha + sign) : Nat(2 * alpha + sign));
        } else {
          if (n % 2 != 0) throw std::logic_error("correction row entails an even n");
          put(2 * alpha + sign * (1 - alpha));
        }
      }
      if (n % 2 == 1 && Nat(p - 1) % alpha == 0) {
        if (h % 2 != 1) throw std::logic_error("correction row entails an odd h");
        put(div_exact(alpha + 2, 2, "correction"));
      }
      if (!delta) throw std::invalid_argument("no closed correction case applies");
      Nat gamma = div_exact(Nat(n) * (nat_pow(Nat((p + 1) / 2), h) - *delta), q - 1,
                            "closed form");
      return make_report(std::move(gamma), hyper_genus(n));
    }
    case FamilyId::twisted_odd: {
      const std::uint64_t n = need(params.n, "family needs n");
      require(p != 2, "p must be odd");
      require(n >= 1 && n % 2 == 1, "n must be odd");
      require(n % p != 0, "characteristic divides an exponent");
      Nat gamma = prank_hyperelliptic_formula(p, n).gamma;
      return make_report(std::move(gamma), Nat(n / 2));
    }
    case FamilyId::twisted_even: {
      const std::uint64_t n = need(params.n, "family needs n");
      require(p != 2, "p must be odd");
      return twisted_even_closed(p, n, /*allow_machinery=*/false);
    }
    case FamilyId::twisted_php1: {
      const unsigned long h = need_exp(params.h, "family needs h");
      check_exponent(h);
      require(p != 2, "p must be odd");
      const Nat n = nat_pow(p, h) + 1;
      Nat gamma = nat_pow(Nat((p + 1) / 2), h);
      return make_report(std::move(gamma), div_exact(n, 2, "genus"));
    }
    case FamilyId::odd_cofactor_equal: {
      const unsigned long h = need_exp(params.h, "family needs h");
      const std::uint64_t a = need(params.a, "family needs a");
      check_exponent(h);
      require(p != 2, "p must be odd");
      require(a % 2 == 1, "cofactor must be odd");
      const Nat q = nat_pow(p, h);
      require((q - 1) % a == 0, "cofactor must divide p^h - 1");
      const Nat n_small = div_exact(q - 1, a, "cofactor");
      if (!fits_u64(n_small)) throw std::length_error("n too large");
      Nat gamma = prank_hyperelliptic(p, to_u64(n_small, "n")).gamma;
      return make_report(std::move(gamma), hyper_genus(2 * n_small));
    }
    case FamilyId::dgz: {
      const unsigned long h = need_exp(params.h, "family needs h");
      check_exponent(h);
      const Nat q = nat_pow(p, h);
      Nat lead = div_exact((nat_pow(Nat(p) + 1, h) - nat_pow(Nat(2), h)) * nat_pow(q, 4),
                           nat_pow(Nat(2), h), "closed form");
      Nat gamma = lead - nat_pow(q, 3) + q + 1;
      return make_report(std::move(gamma), std::nullopt);
    }
    case FamilyId::bks: {
      const unsigned long h = need_exp(params.h, "family needs h");
      check_exponent(h);
      require(p != 2, "p must be odd");
      const Nat q = nat_pow(p, h);
      Nat gamma = (nat_pow(Nat((p + 1) / 2), h) - 1) * q - 1;
      return make_report(std::move(gamma), std::nullopt);
    }
    case FamilyId::pp1_block: {
      const std::uint64_t m0 = need(params.m, "family needs m");
      const std::uint64_t n0 = need(params.n, "family needs n");
      require(p != 2, "p must be odd");
      require(m0 >= 1 && n0 >= 1, "cofactors must be positive");
      require((p - 1) % m0 == 0 && (p - 1) % n0 == 0, "cofactors must divide p - 1");
      const Nat m(m0), n(n0), d(std::gcd(m0, n0));
      const Nat pn(p);
      Nat inner = m * n * pn * pn + 2 * (2 * m * n - m - n - d) * pn +
                  3 * m * n - 2 * m - 2 * n - 2 * d + 4;
      Nat num = 3 * m * n * inner - (m * m + n * n + d * d) * (pn - 1) * (pn - 1);
      Nat gamma = div_exact(num, 12 * m * n, "closed form");
      const Nat mm = m * (p + 1);
      const Nat nn = n * (p + 1);
      return make_report(std::move(gamma), fermat_genus(mm, nn));
    }
  }
  throw std::logic_error("unknown family id");
}

PRankReport prank_twisted(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (n == 0 || n % p == 0) throw std::invalid_argument("characteristic divides an exponent");
  Nat big = prank_hyperelliptic(p, 2 * n).gamma;
  Nat small = prank_hyperelliptic(p, n).gamma;
  PRankReport rep;
  rep.gamma = big - small;
  rep.genus = Nat(n / 2);
  rep.method = Method::naive;
  if (rep.gamma < 0 || rep.gamma > *rep.genus)
    throw std::logic_error("p-rank fell outside [0, genus]");
  if (*rep.genus == 0) rep.notes = "rational curve";
  return rep;
}

PRankReport prank_twisted_formula(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (n == 0 || n % p == 0) throw std::invalid_argument("characteristic divides an exponent");
  if (n % 2 == 1) {
    PRankReport rep;
    rep.gamma = prank_hyperelliptic_formula(p, n).gamma;
    rep.genus = Nat(n / 2);
    rep.method = Method::closed_form;
    if (rep.gamma > *rep.genus) throw std::logic_error("p-rank fell outside [0, genus]");
    if (*rep.genus == 0) rep.notes = "rational curve";
    return rep;
  }
  return twisted_even_closed(p, n, /*allow_machinery=*/true);
}

PRankReport prank_dgz(std::uint64_t p, unsigned long h) {
  if (!is_prime(p)) throw std::invalid_argument("p is not prime");
  FamilyParams fp;
  fp.h = h;
  return closed_form(p, FamilyId::dgz, fp);
}

PRankReport prank_bks(std::uint64_t p, unsigned long h) {
  if (!is_prime(p)) throw std::invalid_argument("p is not prime");
  FamilyParams fp;
  fp.h = h;
  return closed_form(p, FamilyId::bks, fp);
}

PRankReport prank_curve(const CurveSpec& spec) {
  validate(spec);
  if (const auto* f = std::get_if<FermatParams>(&spec.shape))
    return prank_general(make_context(spec.p, f->m, f->n));
  if (const auto* t = std::get_if<TwistedHyperellipticParams>(&spec.shape))
    return prank_twisted(spec.p, t->n);
  if (const auto* g = std::get_if<DgzParams>(&spec.shape))
    return prank_dgz(spec.p, static_cast<unsigned long>(g->h));
  const auto& b = std::get<BksParams>(spec.shape);
  return prank_bks(spec.p, static_cast<unsigned long>(b.h));
}

namespace {

bool same_params(const FamilyParams& a, const FamilyParams& b) {
  return a.m == b.m && a.n == b.n && a.h == b.h && a.r == b.r && a.a == b.a &&
         a.b == b.b && a.u == b.u && a.v == b.v;
}

}  // namespace

std::vector<FamilyMatch> match_families(std::uint64_t p, std::uint64_t m, std::uint64_t n) {
  if (!is_prime(p)) throw std::invalid_argument("p is not prime");
  if (m < 2 || n < 2) throw std::invalid_argument("exponents must be at least 2");
  if (m % p == 0 || n % p == 0)
    throw std::invalid_argument("characteristic divides an exponent");
  std::vector<FamilyMatch> out;
  auto add = [&](FamilyId id, const FamilyParams& fp) {
    for (const auto& e : out)
      if (e.id == id && same_params(e.params, fp)) return;
    out.push_back({id, fp, closed_form(p, id, fp)});
  };
  auto oriented = [&](std::uint64_t mm, std::uint64_t nn) {
    FamilyParams fp;
    if ((p - 1) % mm == 0 && (p + 1) % nn == 0) {
      fp = {};
      fp.m = mm;
      fp.n = nn;
      add(FamilyId::pm1_pp1, fp);
    }
    if (unsigned long h = power_shape(p, -1, Nat(nn)); h != 0 && nn % mm == 0) {
      fp = {};
      fp.m = mm;
      fp.h = h;
      add(FamilyId::m_phm1, fp);
    }
    if (Nat(mm) == Nat(p) * p + p + 1 && mm == nn) add(FamilyId::p2p1_fermat, {});
    if (Nat(mm) == Nat(p) * p + p + 1 && Nat(nn) == nat_pow(p, 3) - 1)
      add(FamilyId::p2p1_p3m1, {});
    if (p != 2 && mm == nn) {
      if (unsigned long h = power_shape(p, -1, 2 * Nat(mm) + 1); h != 0) {
        fp = {};
        fp.h = h;
        add(FamilyId::half_phm1_fermat, fp);
      }
    }
    if (p != 2 && nn == 2 * mm) {
      if (unsigned long h = power_shape(p, -1, Nat(nn)); h != 0) {
        fp = {};
        fp.h = h;
        add(FamilyId::half_phm1_full, fp);
      }
    }
    {
      unsigned long a = power_shape(p, -1, Nat(mm));
      unsigned long b = power_shape(p, -1, Nat(nn));
      if (a != 0 && b != 0) {
        fp = {};
        fp.a = a;
        fp.b = b;
        add(FamilyId::pam1_pbm1, fp);
      }
    }
    if (p == 2 && mm % 2 == 1 && nn % 2 == 1 &&
        std::gcd(mult_order(2, mm), mult_order(2, nn)) == 1) {
      fp = {};
      fp.m = mm;
      fp.n = nn;
      add(FamilyId::char2_coprime_orders, fp);
    }
    {
      std::optional<std::uint64_t> u, v;
      for (std::uint64_t e = 0; e <= mult_order(p, mm) && !u; ++e)
        if ((nat_pow(p, e) + 1) % mm == 0) u = e;
      for (std::uint64_t e = 0; e <= mult_order(p, nn) && !v; ++e)
        if ((nat_pow(p, e) + 1) % nn == 0) v = e;
      if (u && v) {
        fp = {};
        fp.m = mm;
        fp.n = nn;
        fp.u = *u;
        fp.v = *v;
        add(FamilyId::plus1_plus1_zero, fp);
      }
    }
    {
      unsigned long a = power_shape(p, +1, Nat(mm));
      unsigned long b = power_shape(p, -1, Nat(nn));
      if (a != 0 && b != 0) {
        fp = {};
        fp.a = a;
        fp.b = b;
        add((b / std::gcd(a, b)) % 2 == 0 ? FamilyId::pap1_pbm1_even
                                          : FamilyId::pap1_pbm1_odd,
            fp);
      }
    }
    if (p == 2 && mm % 2 == 1 && nn % 2 == 1) {
      unsigned long om = mult_order(2, mm);
      unsigned long on = mult_order(2, nn);
      std::optional<std::uint64_t> u;
      for (std::uint64_t e = 1; e <= om && !u; ++e)
        if ((nat_pow(2, e) + 1) % mm == 0) u = e;
      if (u) {
        for (std::uint64_t t = 1; t <= 8; ++t) {
          std::uint64_t v = t * on;
          if ((v / std::gcd(*u, v)) % 2 == 1) {
            fp = {};
            fp.m = mm;
            fp.n = nn;
            fp.u = *u;
            fp.v = v;
            add(FamilyId::char2_plus1_minus1_zero, fp);
            break;
          }
        }
      }
    }
    if (mm == 2 && p != 2) {
      auto try_r = [&](FamilyId id, auto shape) {
        for (unsigned long r = 1; r <= 256; ++r) {
          Nat val = shape(r);
          if (val == nn) {
            fp = {};
            fp.r = r;
            add(id, fp);
            return;
          }
          if (val > nn) return;
        }
      };
      try_r(FamilyId::hyper_phm1,
            [&](unsigned long r) -> Nat { return nat_pow(p, r) - 1; });
      try_r(FamilyId::hyper_2php1,
            [&](unsigned long r) -> Nat { return 2 * (nat_pow(p, r) + 1); });
      try_r(FamilyId::hyper_2phm1,
            [&](unsigned long r) -> Nat { return 2 * (nat_pow(p, r) - 1); });
      try_r(FamilyId::hyper_p2rpr1, [&](unsigned long r) -> Nat {
        return nat_pow(p, 2 * r) + nat_pow(p, r) + 1;
      });
      try_r(FamilyId::hyper_2p2rpr1, [&](unsigned long r) -> Nat {
        return 2 * (nat_pow(p, 2 * r) + nat_pow(p, r) + 1);
      });
      try_r(FamilyId::hyper_alternating, [&](unsigned long r) -> Nat {
        return nat_pow(p, 3 * r) - nat_pow(p, 2 * r) + nat_pow(p, r) - 1;
      });
      try {
        fp = {};
        fp.n = nn;
        add(FamilyId::hyper_correction, fp);
      } catch (const std::invalid_argument&) {
      } catch (const std::length_error&) {
      }
      if (nn % 2 == 0) {
        unsigned long h0 = mult_order(p, nn / 2);
        for (unsigned long t = 1; t <= 4; ++t) {
          unsigned long h = t * h0;
          Nat q = nat_pow(p, h);
          if ((q - 1) % (nn / 2) != 0) continue;
          Nat a = div_exact(q - 1, nn / 2, "cofactor");
          if (a % 2 == 1 && fits_u64(a)) {
            fp = {};
            fp.h = h;
            fp.a = to_u64(a, "cofactor");
            add(FamilyId::odd_cofactor_equal, fp);
            break;
          }
        }
      }
    }
    if (p != 2 && mm % (p + 1) == 0 && nn % (p + 1) == 0 &&
        (p - 1) % (mm / (p + 1)) == 0 && (p - 1) % (nn / (p + 1)) == 0) {
      fp = {};
      fp.m = mm / (p + 1);
      fp.n = nn / (p + 1);
      add(FamilyId::pp1_block, fp);
    }
  };
  oriented(m, n);
  if (m != n) oriented(n, m);
  return out;
}

std::vector<FamilyMatch> match_twisted_families(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (n == 0 || n % p == 0) throw std::invalid_argument("characteristic divides an exponent");
  std::vector<FamilyMatch> out;
  auto add = [&](FamilyId id, const FamilyParams& fp) {
    try {
      out.push_back({id, fp, closed_form(p, id, fp)});
    } catch (const std::invalid_argument&) {
    } catch (const std::length_error&) {
    }
  };
  FamilyParams fp;
  if (n % 2 == 1) {
    fp = {};
    fp.n = n;
    add(FamilyId::twisted_odd, fp);
  } else {
    fp = {};
    fp.n = n;
    add(FamilyId::twisted_even, fp);
  }
  if (unsigned long h = power_shape(p, +1, Nat(n)); h != 0) {
    fp = {};
    fp.h = h;
    add(FamilyId::twisted_php1, fp);
  }
  return out;
}

std::vector<IdentityCheck> kani_rosen_identities(std::uint64_t p, std::uint64_t u,
                                                 unsigned long k) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (u == 0 || u % 2 == 0) throw std::invalid_argument("u must be odd");
  if (u % p == 0) throw std::invalid_argument("characteristic divides an exponent");
  if (k > 60 || (Nat(u) << k) > 1000000) throw std::length_error("tower too large");
  std::vector<Nat> f(k + 1), hh(k == 0 ? 1 : k);
  for (unsigned long j = 0; j <= k; ++j)
    f[j] = prank_hyperelliptic(p, u << j).gamma;
  for (unsigned long j = 0; j < hh.size(); ++j)
    hh[j] = prank_twisted_formula(p, u << j).gamma;
  std::vector<IdentityCheck> out;
  out.push_back({"gamma(F_0) == gamma(H_0)", f[0], hh[0]});
  for (unsigned long j = 1; j <= k; ++j)
    out.push_back({"gamma(H_" + std::to_string(j - 1) + ") == gamma(F_" +
                       std::to_string(j) + ") - gamma(F_" + std::to_string(j - 1) + ")",
                   hh[j - 1], f[j] - f[j - 1]});
  if (k >= 1) {
    Nat sum = f[0];
    for (unsigned long j = 0; j < k; ++j) sum += hh[j];
    out.push_back({"gamma(F_" + std::to_string(k) + ") == gamma(F_0) + sum gamma(H_j)",
                   f[k], sum});
    out.push_back({"gamma(F_1) == 2 gamma(F_0)", f[1], 2 * f[0]});
  }
  return out;
}

}  // namespace fermat
