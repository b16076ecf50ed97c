#include "fermat/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "fermat/counted_sets.hpp"
#include "fermat/arith.hpp"
#include "fermat/counting.hpp"
#include "fermat/curves.hpp"
#include "fermat/families.hpp"
#include "fermat/oracle.hpp"
#include "fermat/sweep.hpp"

namespace fermat {

namespace {

using Task = std::function<std::optional<std::string>()>;  // nullopt = pass

// Runs tasks (parallel when opt.jobs allows), folding outcomes in input
// order; length_error means the instance is out of reach and counts as a
// skip, any other failure counts as a mismatch.
void execute(const std::vector<Task>& tasks, const VerifyOptions& opt, VerifyResult& res) {
  std::vector<int> kind(tasks.size(), 0);
  std::vector<std::string> msg(tasks.size());
  parallel_for(tasks.size(), opt.jobs, [&](std::size_t i) {
    try {
      if (auto r = tasks[i]()) {
        kind[i] = 1;
        msg[i] = *r;
      }
    } catch (const std::length_error& e) {
      kind[i] = 2;
      msg[i] = e.what();
    } catch (const std::exception& e) {
      kind[i] = 1;
      msg[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (kind[i] == 2) {
      ++res.skipped;
      continue;
    }
    ++res.checked;
    if (kind[i] == 1) {
      ++res.failed;
      if (res.mismatches.size() < 10) res.mismatches.push_back(msg[i]);
    }
  }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t max_p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= max_p; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= x; ++d)
    if (x % d == 0) {
      out.push_back(d);
      if (d != x / d) out.push_back(x / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

Nat genus_of_pair(std::uint64_t m, std::uint64_t n) {
  return div_exact(Nat(m - 1) * (n - 1) + 1 - std::gcd(m, n), 2, "genus");
}

std::string label(std::uint64_t p, std::uint64_t m, std::uint64_t n) {
  return "p=" + std::to_string(p) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
}

std::optional<std::string> expect_equal(const std::string& what, const Nat& lhs,
                                        const Nat& rhs) {
  if (lhs == rhs) return std::nullopt;
  return what + ": " + lhs.get_str() + " != " + rhs.get_str();
}

// counter on the full curve for a closed-form family instance
Task fermat_family_task(std::uint64_t p, FamilyId id, FamilyParams fp, std::uint64_t m,
                        std::uint64_t n) {
  return [=]() -> std::optional<std::string> {
    Nat closed = closed_form(p, id, fp).gamma;
    Nat counter = prank_general(make_context(p, m, n)).gamma;
    return expect_equal(std::string(family_id_name(id)) + " " + label(p, m, n), closed,
                        counter);
  };
}

}  // namespace

VerifyResult check_bassa_beelen(const VerifyOptions& opt) {
  VerifyResult res;
  res.suite = "bassa-beelen";
  std::vector<Task> tasks;
  for (std::uint64_t p : {3, 5, 7})
    for (unsigned long h : {1, 2}) {
      tasks.push_back([=]() -> std::optional<std::string> {
        const std::uint64_t n = to_u64(nat_pow(p, h) - 1, "n");
        Nat expect = nat_pow(div_exact(Nat(p) * (p + 1), 2, "formula"), h) -
                     3 * (nat_pow(p, h) - 1);
        Nat got = prank_general(make_context(p, n, n)).gamma;
        return expect_equal("bassa-beelen " + label(p, n, n), got, expect);
      });
    }
  execute(tasks, opt, res);
  return res;
}

VerifyResult check_family_formulas(const VerifyOptions& opt) {
  VerifyResult res;
  res.suite = "family-formulas";
  const std::uint64_t cap = opt.max_genus ? opt.max_genus : 2000;
  const std::uint64_t n_cap = 2 * cap + 2;  // genus(2, n) <= cap
  std::vector<Task> tasks;
  for (std::uint64_t p : primes_up_to(opt.max_p)) {
    auto add = [&](FamilyId id, FamilyParams fp, std::uint64_t m, std::uint64_t n) {
      if (m < 2 || n < 2 || m % p == 0 || n % p == 0) return;
      if (genus_of_pair(m, n) > cap) return;
      tasks.push_back(fermat_family_task(p, id, fp, m, n));
    };
    FamilyParams fp;
    // m | p-1, n | p+1
    for (std::uint64_t m : divisors(p - 1))
      for (std::uint64_t n : divisors(p + 1)) {
        fp = {};
        fp.m = m;
        fp.n = n;
        add(FamilyId::pm1_pp1, fp, m, n);
      }
    // m | p^h-1, n = p^h-1
    for (unsigned long h = 1; nat_pow(p, h) - 1 <= n_cap; ++h) {
      const std::uint64_t n = to_u64(nat_pow(p, h) - 1, "n");
      for (std::uint64_t m : divisors(n)) {
        fp = {};
        fp.m = m;
        fp.h = h;
        add(FamilyId::m_phm1, fp, m, n);
      }
    }
    // m = n = p^2+p+1 and (p^2+p+1, p^3-1)
    {
      const std::uint64_t s = p * p + p + 1;
      add(FamilyId::p2p1_fermat, {}, s, s);
      add(FamilyId::p2p1_p3m1, {}, s, to_u64(nat_pow(p, 3) - 1, "n"));
    }
    if (p != 2) {
      // m = n = (p^h-1)/2 and (m, 2m)
      for (unsigned long h = 1; nat_pow(p, h) - 1 <= 2 * Nat(n_cap); ++h) {
        const std::uint64_t n = to_u64(nat_pow(p, h) - 1, "n");
        fp = {};
        fp.h = h;
        add(FamilyId::half_phm1_fermat, fp, n / 2, n / 2);
        fp = {};
        fp.h = h;
        add(FamilyId::half_phm1_full, fp, n / 2, n);
      }
    }
    // m = p^a-1, n = p^b-1
    for (std::uint64_t a = 1; nat_pow(p, a) - 1 <= n_cap; ++a)
      for (std::uint64_t b = 1; nat_pow(p, b) - 1 <= n_cap; ++b) {
        fp = {};
        fp.a = a;
        fp.b = b;
        add(FamilyId::pam1_pbm1, fp, to_u64(nat_pow(p, a) - 1, "m"),
            to_u64(nat_pow(p, b) - 1, "n"));
      }
    // m = p^a+1, n = p^b-1
    for (std::uint64_t a = 1; nat_pow(p, a) + 1 <= n_cap; ++a)
      for (std::uint64_t b = 1; nat_pow(p, b) - 1 <= n_cap; ++b) {
        fp = {};
        fp.a = a;
        fp.b = b;
        const std::uint64_t d = std::gcd(a, b);
        add((b / d) % 2 == 0 ? FamilyId::pap1_pbm1_even : FamilyId::pap1_pbm1_odd, fp,
            to_u64(nat_pow(p, a) + 1, "m"), to_u64(nat_pow(p, b) - 1, "n"));
      }
    if (p == 2) {
      // odd exponents with coprime orders of 2
      for (std::uint64_t m = 3; m <= n_cap; m += 2)
        for (std::uint64_t n = 3; n <= n_cap && genus_of_pair(m, n) <= cap; n += 2) {
          if (std::gcd(mult_order(2, m), mult_order(2, n)) != 1) continue;
          fp = {};
          fp.m = m;
          fp.n = n;
          add(FamilyId::char2_coprime_orders, fp, m, n);
        }
    }
    if (p != 2) {
      // the six y^2 = x^n+1 families
      auto add_hyper = [&](FamilyId id, auto shape) {
        for (unsigned long r = 1;; ++r) {
          Nat nn = shape(r);
          if (nn > n_cap) break;
          fp = {};
          fp.r = r;
          add(id, fp, 2, to_u64(nn, "n"));
        }
      };
      add_hyper(FamilyId::hyper_phm1,
                [&](unsigned long r) -> Nat { return nat_pow(p, r) - 1; });
      add_hyper(FamilyId::hyper_2php1,
                [&](unsigned long r) -> Nat { return 2 * (nat_pow(p, r) + 1); });
      add_hyper(FamilyId::hyper_2phm1,
                [&](unsigned long r) -> Nat { return 2 * (nat_pow(p, r) - 1); });
      add_hyper(FamilyId::hyper_p2rpr1, [&](unsigned long r) -> Nat {
        return nat_pow(p, 2 * r) + nat_pow(p, r) + 1;
      });
      add_hyper(FamilyId::hyper_2p2rpr1, [&](unsigned long r) -> Nat {
        return 2 * (nat_pow(p, 2 * r) + nat_pow(p, r) + 1);
      });
      add_hyper(FamilyId::hyper_alternating, [&](unsigned long r) -> Nat {
        return nat_pow(p, 3 * r) - nat_pow(p, 2 * r) + nat_pow(p, r) - 1;
      });
      // closed correction cases, reached from the cofactor side
      std::set<std::uint64_t> seen;
      std::set<std::uint64_t> alphas;
      for (std::uint64_t t : {(p - 1) / 2, (p + 1) / 2, (p + 3) / 2, p - 1})
        for (std::uint64_t al : divisors(t)) alphas.insert(al);
      for (unsigned long h = 1; h <= 24; ++h) {
        Nat qm1 = nat_pow(p, h) - 1;
        if (qm1 > Nat(n_cap) * (*alphas.rbegin())) break;
        for (std::uint64_t al : alphas) {
          if (qm1 % al != 0) continue;
          Nat n_nat = div_exact(qm1, al, "n");
          if (n_nat < 2 || n_nat > n_cap) continue;
          const std::uint64_t n = to_u64(n_nat, "n");
          if (!seen.insert(n).second) continue;
          tasks.push_back([=]() -> std::optional<std::string> {
            FamilyParams hp;
            hp.n = n;
            Nat closed;
            try {
              closed = closed_form(p, FamilyId::hyper_correction, hp).gamma;
            } catch (const std::invalid_argument&) {
              return std::nullopt;  // minimal extension degree moved it off-case
            }
            Nat counter = prank_general(make_context(p, 2, n)).gamma;
            return expect_equal("hyper-correction " + label(p, 2, n), closed, counter);
          });
        }
      }
      // (m0(p+1), n0(p+1)) block family
      for (std::uint64_t m0 : divisors(p - 1))
        for (std::uint64_t n0 : divisors(p - 1)) {
          fp = {};
          fp.m = m0;
          fp.n = n0;
          add(FamilyId::pp1_block, fp, m0 * (p + 1), n0 * (p + 1));
        }
    }
    // zero families with small exponent parameters (full grids in the
    // dedicated zero-family check; here a slice keeps every id in the sweep)
    for (std::uint64_t u = 0; u <= 4; ++u)
      for (std::uint64_t v = 0; v <= 4; ++v) {
        for (std::uint64_t m : divisors(to_u64(nat_pow(p, u) + 1, "m")))
          for (std::uint64_t n : divisors(to_u64(nat_pow(p, v) + 1, "n"))) {
            fp = {};
            fp.m = m;
            fp.n = n;
            fp.u = u;
            fp.v = v;
            add(FamilyId::plus1_plus1_zero, fp, m, n);
          }
        if (p == 2 && u >= 1 && v >= 1 && (v / std::gcd(u, v)) % 2 == 1) {
          for (std::uint64_t m : divisors(to_u64(nat_pow(p, u) + 1, "m")))
            for (std::uint64_t n : divisors(to_u64(nat_pow(p, v) - 1, "n"))) {
              fp = {};
              fp.m = m;
              fp.n = n;
              fp.u = u;
              fp.v = v;
              add(FamilyId::char2_plus1_minus1_zero, fp, m, n);
            }
        }
      }
  }
  execute(tasks, opt, res);
  return res;
}

VerifyResult check_zero_families(const VerifyOptions& opt) {
  VerifyResult res;
  res.suite = "zero-families";
  std::vector<Task> tasks;
  for (std::uint64_t p : {2, 3, 5}) {
    if (p > opt.max_p) continue;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    auto zero_task = [&](FamilyId id, FamilyParams fp, std::uint64_t m, std::uint64_t n) {
      if (m < 2 || n < 2 || m % p == 0 || n % p == 0) return;
      if (!seen.insert({m, n}).second) return;
      tasks.push_back([=]() -> std::optional<std::string> {
        Nat closed = closed_form(p, id, fp).gamma;
        if (closed != 0) return std::string(family_id_name(id)) + " closed form not zero";
        Nat counter = prank_general(make_context(p, m, n)).gamma;
        return expect_equal(std::string(family_id_name(id)) + " " + label(p, m, n),
                            counter, 0);
      });
    };
    for (std::uint64_t u = 0; u <= 4; ++u)
      for (std::uint64_t v = 0; v <= 4; ++v)
        for (std::uint64_t m : divisors(to_u64(nat_pow(p, u) + 1, "m")))
          for (std::uint64_t n : divisors(to_u64(nat_pow(p, v) + 1, "n"))) {
            FamilyParams fp;
            fp.m = m;
            fp.n = n;
            fp.u = u;
            fp.v = v;
            zero_task(FamilyId::plus1_plus1_zero, fp, m, n);
          }
    if (p == 2) {
      for (std::uint64_t u = 1; u <= 4; ++u)
        for (std::uint64_t v = 1; v <= 4; ++v) {
          for (std::uint64_t m : divisors(to_u64(nat_pow(2, u) - 1, "m")))
            for (std::uint64_t n : divisors(to_u64(nat_pow(2, v) - 1, "n"))) {
              if (m < 3 || n < 3) continue;
              if (std::gcd(mult_order(2, m), mult_order(2, n)) != 1) continue;
              FamilyParams fp;
              fp.m = m;
              fp.n = n;
              zero_task(FamilyId::char2_coprime_orders, fp, m, n);
            }
          if ((v / std::gcd(u, v)) % 2 == 1) {
            for (std::uint64_t m : divisors(to_u64(nat_pow(2, u) + 1, "m")))
              for (std::uint64_t n : divisors(to_u64(nat_pow(2, v) - 1, "n"))) {
                if (m < 3 || n < 3) continue;
                FamilyParams fp;
                fp.m = m;
                fp.n = n;
                fp.u = u;
                fp.v = v;
                zero_task(FamilyId::char2_plus1_minus1_zero, fp, m, n);
              }
          }
        }
    }
  }
  // zero p-rank does not imply supersingular
  tasks.push_back([]() -> std::optional<std::string> {
    FermatContext ctx = make_context(2, 3, 5);
    if (prank_general(ctx).gamma != 0) return "expected zero p-rank at p=2 m=3 n=5";
    if (is_supersingular(ctx).supersingular)
      return "p=2 m=3 n=5 wrongly flagged supersingular";
    return std::nullopt;
  });
  execute(tasks, opt, res);
  return res;
}

VerifyResult check_twisted_bridge(const VerifyOptions& opt) {
  VerifyResult res;
  res.suite = "twisted-bridge";
  std::vector<Task> tasks;
  for (std::uint64_t p : primes_up_to(opt.max_p)) {
    if (p == 2) continue;
    for (std::uint64_t n = 1; n <= 40; ++n) {
      if (n % p == 0) continue;
      if (n % 2 == 0) {
        tasks.push_back([=]() -> std::optional<std::string> {
          Nat formula = prank_twisted_formula(p, n).gamma;  // throws length_error => skip
          Nat bridge = prank_twisted(p, n).gamma;
          return expect_equal("twisted formula p=" + std::to_string(p) +
                                  " n=" + std::to_string(n),
                              formula, bridge);
        });
      } else {
        tasks.push_back([=]() -> std::optional<std::string> {
          Nat twisted = prank_twisted(p, n).gamma;
          Nat plain = prank_hyperelliptic(p, n).gamma;
          return expect_equal("twisted odd p=" + std::to_string(p) +
                                  " n=" + std::to_string(n),
                              twisted, plain);
        });
      }
    }
  }
  execute(tasks, opt, res);
  return res;
}

VerifyResult check_block_formula(const VerifyOptions& opt) {
  VerifyResult res;
  res.suite = "block-formula";
  const std::uint64_t cap = opt.max_genus ? opt.max_genus : 2000;
  std::vector<Task> tasks;
  for (std::uint64_t p : primes_up_to(opt.max_p)) {
    if (p < 5) continue;
    for (std::uint64_t m0 : divisors(p - 1))
      for (std::uint64_t n0 : divisors(p - 1)) {
        const std::uint64_t m = m0 * (p + 1);
        const std::uint64_t n = n0 * (p + 1);
        if (genus_of_pair(m, n) > cap) continue;
        FamilyParams fp;
        fp.m = m0;
        fp.n = n0;
        tasks.push_back(fermat_family_task(p, FamilyId::pp1_block, fp, m, n));
      }
  }
  execute(tasks, opt, res);
  return res;
}

VerifyResult check_cofactor_identity(const VerifyOptions& opt) {
  VerifyResult res;
  res.suite = "cofactor-identity";
  const std::uint64_t cap = opt.max_genus ? opt.max_genus : 2000;
  std::vector<Task> tasks;
  for (std::uint64_t p : primes_up_to(opt.max_p)) {
    if (p == 2) continue;
    for (unsigned long h = 1; h <= 6; ++h) {
      const Nat qm1 = nat_pow(p, h) - 1;
      if (!fits_u64(qm1)) break;
      for (std::uint64_t a : divisors(to_u64(qm1, "q-1"))) {
        if (a % 2 == 0) continue;
        const std::uint64_t n_small = to_u64(qm1, "q-1") / a;
        if (n_small < 2 || n_small - 1 > cap) continue;
        tasks.push_back([=]() -> std::optional<std::string> {
          FamilyParams fp;
          fp.h = h;
          fp.a = a;
          Nat closed = closed_form(p, FamilyId::odd_cofactor_equal, fp).gamma;
          Nat counter = prank_hyperelliptic(p, 2 * n_small).gamma;
          return expect_equal("odd-cofactor-equal p=" + std::to_string(p) +
                                  " n=" + std::to_string(2 * n_small),
                              closed, counter);
        });
      }
    }
  }
  execute(tasks, opt, res);
  return res;
}

VerifyResult check_oracle_agreement(const VerifyOptions& opt) {
  VerifyResult res;
  res.suite = "oracle";
  const std::uint64_t cap = opt.max_genus ? opt.max_genus : 50;
  std::vector<Task> tasks;
  for (std::uint64_t p : primes_up_to(opt.max_p))
    for (std::uint64_t m = 2; m <= 2 * cap + 3; ++m) {
      if (m % p == 0) continue;
      for (std::uint64_t n = 2;; ++n) {
        if (genus_of_pair(m, n) > cap) break;  // genus never decreases in n
        if (n % p == 0) continue;
        tasks.push_back([=]() -> std::optional<std::string> {
          FermatContext ctx = make_context(p, m, n);
          FpMatrix a = to_dense(cartier_matrix(ctx));
          // column sparsity: at most one nonzero per column
          for (std::size_t c = 0; c < a.dim; ++c) {
            std::size_t nonzero = 0;
            for (std::size_t r = 0; r < a.dim; ++r)
              if (a.at(r, c) != 0) ++nonzero;
            if (nonzero > 1) return "dense Cartier column has several entries " + label(p, m, n);
          }
          const std::uint64_t g = to_u64(ctx.genus, "genus");
          Nat oracle = prank_oracle(ctx).gamma;
          Nat counter = prank_general(ctx).gamma;
          if (auto bad = expect_equal("oracle " + label(p, m, n), oracle, counter))
            return bad;
          // stable rank: the genus-th power has stabilized
          if (g > 0 && fp_rank(fp_pow(a, g)) != fp_rank(fp_pow(a, g + 1)))
            return "rank not stable at the genus " + label(p, m, n);
          check_h_step_diagonal(ctx);  // throws on violation
          return std::nullopt;
        });
      }
    }
  execute(tasks, opt, res);
  return res;
}

VerifyResult check_counted_sets(const VerifyOptions& opt) {
  VerifyResult res;
  res.suite = "counted-sets";
  std::vector<Task> tasks;
  auto both = [&](SetParams sp, const std::string& what) {
    tasks.push_back([=]() -> std::optional<std::string> {
      return expect_equal(what, closed_count(sp), enumerate_count(sp));
    });
  };
  for (std::uint64_t p : {2, 3, 5, 7}) {
    SetParams sp;
    sp.which = SetKind::quadruple_min_sum;
    sp.b = p;
    both(sp, "quadruple_min_sum p=" + std::to_string(p));
  }
  for (SetKind kind : {SetKind::min_box, SetKind::mirror_min_box, SetKind::split_min_box})
    for (std::uint64_t b = kind == SetKind::mirror_min_box ? 2 : 1; b <= 9; ++b)
      for (std::uint64_t m = 1; m <= 4; ++m)
        for (std::uint64_t n = 1; n <= 4; ++n) {
          SetParams sp;
          sp.which = kind;
          sp.b = b;
          sp.m = m;
          sp.n = n;
          both(sp, "set kind=" + std::to_string(static_cast<int>(kind)) +
                       " b=" + std::to_string(b) + " m=" + std::to_string(m) +
                       " n=" + std::to_string(n));
        }
  execute(tasks, opt, res);
  return res;
}

namespace {

// direct count of sum_i coeffs[i]*x_i == b (mod alpha) over [0, top]^h
std::uint64_t brute_box(std::uint64_t alpha, std::uint64_t top,
                        const std::vector<std::uint64_t>& c, std::uint64_t b) {
  const std::size_t h = c.size();
  std::vector<std::uint64_t> x(h, 0);
  std::uint64_t hits = 0;
  for (;;) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < h; ++i) s = (s + mul_mod(c[i] % alpha, x[i] % alpha, alpha)) % alpha;
    if (s == b) ++hits;
    std::size_t k = h;
    while (k > 0 && x[k - 1] == top) --k;
    if (k == 0) break;
    ++x[k - 1];
    for (std::size_t j = k; j < h; ++j) x[j] = 0;
  }
  return hits;
}

}  // namespace

VerifyResult check_congruence_box(const VerifyOptions& opt) {
  VerifyResult res;
  res.suite = "congruence-box";
  std::vector<Task> tasks;
  for (std::uint64_t p : {3, 5, 7})
    for (std::uint64_t alpha = 1; alpha <= 8; ++alpha) {
      if (std::gcd(p % alpha, alpha) != 1) continue;  // coefficients must be units
      for (std::size_t h = 1; h <= 4; ++h) {
        std::vector<std::uint64_t> coeffs(h);
        std::uint64_t pw = 1 % alpha;
        for (std::size_t i = 0; i < h; ++i) {
          coeffs[i] = pw;
          pw = mul_mod(pw, p % alpha, alpha);
        }
        for (std::uint64_t t = 0; t <= 2; ++t)
          for (std::uint64_t s = 0; s < alpha; ++s)
            for (std::uint64_t b = 0; b < alpha; ++b) {
              tasks.push_back([=]() -> std::optional<std::string> {
                Nat formula = count_congruence_box(alpha, t, s, coeffs, b);
                Nat brut = brute_box(alpha, t * alpha + s, coeffs, b);
                std::string what = "congruence box p=" + std::to_string(p) +
                                   " alpha=" + std::to_string(alpha) +
                                   " h=" + std::to_string(h) + " t=" + std::to_string(t) +
                                   " s=" + std::to_string(s) + " b=" + std::to_string(b);
                if (auto bad = expect_equal(what, formula, brut)) return bad;
                // residual special cases against direct enumeration
                bool closed_case = s == 0 || s == alpha - 1 ||
                                   (alpha >= 2 && s == alpha - 2) ||
                                   (alpha % 2 == 0 && s == alpha / 2 && b == 0 &&
                                    h % 2 == 1);
                if (closed_case) {
                  Nat delta = congruence_box_residual(alpha, s, coeffs, b);
                  if (auto bad = expect_equal(what + " residual", delta,
                                              Nat(brute_box(alpha, s, coeffs, b))))
                    return bad;
                }
                return std::nullopt;
              });
            }
      }
    }
  execute(tasks, opt, res);
  return res;
}

VerifyResult check_kani_rosen(const VerifyOptions& opt) {
  VerifyResult res;
  res.suite = "kani-rosen";
  std::vector<Task> tasks;
  for (std::uint64_t p : {5, 7})
    for (std::uint64_t u : {3, 5}) {
      if (u % p == 0) continue;
      for (unsigned long k : {1, 2}) {
        tasks.push_back([=]() -> std::optional<std::string> {
          for (const IdentityCheck& c : kani_rosen_identities(p, u, k))
            if (c.lhs != c.rhs)
              return "p=" + std::to_string(p) + " u=" + std::to_string(u) +
                     " k=" + std::to_string(k) + " " + c.name + ": " + c.lhs.get_str() +
                     " != " + c.rhs.get_str();
          return std::nullopt;
        });
      }
    }
  execute(tasks, opt, res);
  return res;
}

std::vector<std::string> all_suites() {
  return {"formulas", "oracle", "counted-sets", "kani-rosen", "congruence-box", "all"};
}

std::vector<VerifyResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
  std::vector<VerifyResult> out;
  const bool all = suite == "all";
  if (all || suite == "formulas") {
    out.push_back(check_bassa_beelen(opt));
    out.push_back(check_family_formulas(opt));
    out.push_back(check_zero_families(opt));
    out.push_back(check_twisted_bridge(opt));
    out.push_back(check_block_formula(opt));
    out.push_back(check_cofactor_identity(opt));
  }
  if (all || suite == "oracle") out.push_back(check_oracle_agreement(opt));
  if (all || suite == "counted-sets") out.push_back(check_counted_sets(opt));
  if (all || suite == "kani-rosen") out.push_back(check_kani_rosen(opt));
  if (all || suite == "congruence-box") out.push_back(check_congruence_box(opt));
  if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
  return out;
}

}  // namespace fermat
