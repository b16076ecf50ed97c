#include "fermat/tables.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "fermat/arith.hpp"
#include "fermat/counting.hpp"
#include "fermat/curves.hpp"
#include "fermat/families.hpp"

namespace fermat {

namespace {

constexpr std::uint64_t kHyperCounterCap = 2000000;  // largest n the C_n counter attempts

std::vector<std::uint64_t> divisors_ge(std::uint64_t x, std::uint64_t lo) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= x; ++d)
    if (x % d == 0) {
      if (d >= lo) out.push_back(d);
      if (d != x / d && x / d >= lo) out.push_back(x / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string flag_for(const Nat& closed, const std::optional<Nat>& counter) {
  if (!counter) return "-";
  return closed == *counter ? "ok" : "MISMATCH";
}

std::string cell(const std::optional<Nat>& v) { return v ? v->get_str() : "-"; }

// Fermat-curve cross-check, gated on the genus reported by the closed form.
std::optional<Nat> fermat_counter(std::uint64_t p, const Nat& m, const Nat& n,
                                  const std::optional<Nat>& genus, const Nat& cap) {
  if (!genus || *genus > cap || !fits_u64(m) || !fits_u64(n)) return std::nullopt;
  return prank_general(make_context(p, to_u64(m, "m"), to_u64(n, "n"))).gamma;
}

std::optional<Nat> hyper_counter(std::uint64_t p, const Nat& n) {
  if (!fits_u64(n) || n > kHyperCounterCap) return std::nullopt;
  return prank_hyperelliptic(p, to_u64(n, "n")).gamma;
}

std::optional<Nat> twisted_counter(std::uint64_t p, const Nat& n) {
  if (!fits_u64(n) || 2 * n > kHyperCounterCap) return std::nullopt;
  return prank_twisted(p, to_u64(n, "n")).gamma;
}

void push(TableDoc& doc, std::vector<std::string> cells) {
  doc.rows.push_back({std::move(cells)});
}

void push_na(TableDoc& doc, const std::string& head, const std::string& why) {
  std::vector<std::string> cells{head};
  while (cells.size() + 1 < doc.columns.size()) cells.push_back("-");
  cells.push_back("n/a (" + why + ")");
  doc.rows.push_back({std::move(cells)});
}

void push_na2(TableDoc& doc, const std::string& c0, const std::string& c1,
              const std::string& why) {
  std::vector<std::string> cells{c0, c1};
  while (cells.size() + 1 < doc.columns.size()) cells.push_back("-");
  cells.push_back("n/a (" + why + ")");
  doc.rows.push_back({std::move(cells)});
}

TableDoc table_fermat_families(const TableOptions& opt) {
  TableDoc doc;
  doc.number = 1;
  doc.p = opt.p;
  doc.columns = {"family", "m", "n", "closed", "counter", "flag"};
  const std::uint64_t p = opt.p;
  const unsigned long H = opt.h_max;

  auto emit = [&](FamilyId id, const FamilyParams& fp, const Nat& m, const Nat& n) {
    PRankReport rep = closed_form(p, id, fp);
    auto counter = fermat_counter(p, m, n, rep.genus, opt.max_counter_genus);
    push(doc, {family_id_name(id), m.get_str(), n.get_str(), rep.gamma.get_str(),
               cell(counter), flag_for(rep.gamma, counter)});
  };

  // m | p-1, n | p+1
  if (p == 2) {
    push_na(doc, family_id_name(FamilyId::pm1_pp1), "p-1 has no divisor >= 2");
  } else {
    for (std::uint64_t m : divisors_ge(p - 1, 2))
      for (std::uint64_t n : divisors_ge(p + 1, 2)) {
        FamilyParams fp;
        fp.m = m;
        fp.n = n;
        emit(FamilyId::pm1_pp1, fp, m, n);
      }
  }
  // m | p-1, n = p^h-1
  if (p == 2) {
    push_na(doc, family_id_name(FamilyId::m_phm1), "p-1 has no divisor >= 2");
  } else {
    for (std::uint64_t m : divisors_ge(p - 1, 2))
      for (unsigned long h = 1; h <= H; ++h) {
        FamilyParams fp;
        fp.m = m;
        fp.h = h;
        emit(FamilyId::m_phm1, fp, m, nat_pow(p, h) - 1);
      }
  }
  {
    const Nat s = Nat(p) * p + p + 1;
    emit(FamilyId::p2p1_fermat, {}, s, s);
    emit(FamilyId::p2p1_p3m1, {}, s, nat_pow(p, 3) - 1);
  }
  // m = n = (p^h-1)/2 and (m, 2m)
  if (p == 2) {
    push_na(doc, family_id_name(FamilyId::half_phm1_fermat),
            "(p^h-1)/2 is not an integer");
    push_na(doc, family_id_name(FamilyId::half_phm1_full),
            "(p^h-1)/2 is not an integer");
  } else {
    for (unsigned long h = 1; h <= H; ++h) {
      if (nat_pow(p, h) < 5) continue;
      Nat half = div_exact(nat_pow(p, h) - 1, 2, "m");
      FamilyParams fp;
      fp.h = h;
      emit(FamilyId::half_phm1_fermat, fp, half, half);
    }
    for (unsigned long h = 1; h <= H; ++h) {
      if (nat_pow(p, h) < 5) continue;
      Nat half = div_exact(nat_pow(p, h) - 1, 2, "m");
      FamilyParams fp;
      fp.h = h;
      emit(FamilyId::half_phm1_full, fp, half, 2 * half);
    }
  }
  // m = p^a-1, n = p^b-1
  for (std::uint64_t a = 1; a <= H; ++a)
    for (std::uint64_t b = 1; b <= H; ++b) {
      if (nat_pow(p, a) < 3 || nat_pow(p, b) < 3) continue;
      FamilyParams fp;
      fp.a = a;
      fp.b = b;
      emit(FamilyId::pam1_pbm1, fp, nat_pow(p, a) - 1, nat_pow(p, b) - 1);
    }
  // m = p^a+1, n = p^b-1, split by the parity of b/gcd(a,b)
  for (int want_even = 1; want_even >= 0; --want_even) {
    FamilyId id = want_even ? FamilyId::pap1_pbm1_even : FamilyId::pap1_pbm1_odd;
    if (p == 2) {
      push_na(doc, family_id_name(id), "table row needs odd p");
      continue;
    }
    for (std::uint64_t a = 1; a <= H; ++a)
      for (std::uint64_t b = 1; b <= H; ++b) {
        if (nat_pow(p, b) < 3) continue;
        const bool even = (b / std::gcd(a, b)) % 2 == 0;
        if (even != static_cast<bool>(want_even)) continue;
        FamilyParams fp;
        fp.a = a;
        fp.b = b;
        emit(id, fp, nat_pow(p, a) + 1, nat_pow(p, b) - 1);
      }
  }
  return doc;
}

TableDoc table_zero_families(const TableOptions& opt) {
  TableDoc doc;
  doc.number = 2;
  doc.p = opt.p;
  doc.columns = {"family", "m", "n", "closed", "counter", "flag"};
  const std::uint64_t p = opt.p;

  auto emit = [&](FamilyId id, const FamilyParams& fp, const Nat& m, const Nat& n) {
    PRankReport rep = closed_form(p, id, fp);
    auto counter = fermat_counter(p, m, n, rep.genus, opt.max_counter_genus);
    push(doc, {family_id_name(id), m.get_str(), n.get_str(), rep.gamma.get_str(),
               cell(counter), flag_for(rep.gamma, counter)});
  };

  if (p == 2) {
    for (std::uint64_t u = 2; u <= 3; ++u)
      for (std::uint64_t v = 2; v <= 3; ++v) {
        if (std::gcd(u, v) != 1) continue;
        FamilyParams fp;
        fp.m = to_u64(nat_pow(2, u) - 1, "m");
        fp.n = to_u64(nat_pow(2, v) - 1, "n");
        emit(FamilyId::char2_coprime_orders, fp, *fp.m, *fp.n);
      }
  } else {
    push_na(doc, family_id_name(FamilyId::char2_coprime_orders), "table row needs p = 2");
  }
  for (std::uint64_t u = 1; u <= 2; ++u)
    for (std::uint64_t v = 1; v <= 2; ++v) {
      FamilyParams fp;
      fp.m = to_u64(nat_pow(p, u) + 1, "m");
      fp.n = to_u64(nat_pow(p, v) + 1, "n");
      fp.u = u;
      fp.v = v;
      emit(FamilyId::plus1_plus1_zero, fp, *fp.m, *fp.n);
    }
  if (p == 2) {
    for (std::uint64_t u = 1; u <= 3; ++u)
      for (std::uint64_t v = 1; v <= 3; ++v) {
        if ((v / std::gcd(u, v)) % 2 == 0) continue;
        const std::uint64_t n = to_u64(nat_pow(2, v) - 1, "n");
        if (n < 3) continue;
        FamilyParams fp;
        fp.m = to_u64(nat_pow(2, u) + 1, "m");
        fp.n = n;
        fp.u = u;
        fp.v = v;
        emit(FamilyId::char2_plus1_minus1_zero, fp, *fp.m, *fp.n);
      }
  } else {
    push_na(doc, family_id_name(FamilyId::char2_plus1_minus1_zero),
            "table row needs p = 2");
  }
  return doc;
}

TableDoc table_hyper_families(const TableOptions& opt) {
  TableDoc doc;
  doc.number = 3;
  doc.p = opt.p;
  doc.columns = {"family", "r", "n", "closed", "counter", "flag"};
  const std::uint64_t p = opt.p;
  if (opt.r_lo < 1 || opt.r_lo > opt.r_hi) throw std::invalid_argument("empty r range");

  const FamilyId shapes[] = {FamilyId::hyper_2phm1, FamilyId::hyper_2php1,
                             FamilyId::hyper_p2rpr1, FamilyId::hyper_2p2rpr1,
                             FamilyId::hyper_alternating};
  for (FamilyId id : shapes) {
    if (p == 2) {
      push_na(doc, family_id_name(id), "table needs odd p");
      continue;
    }
    for (unsigned long r = opt.r_lo; r <= opt.r_hi; ++r) {
      FamilyParams fp;
      fp.r = r;
      PRankReport rep = closed_form(p, id, fp);
      Nat n;
      switch (id) {
        case FamilyId::hyper_2phm1: n = 2 * (nat_pow(p, r) - 1); break;
        case FamilyId::hyper_2php1: n = 2 * (nat_pow(p, r) + 1); break;
        case FamilyId::hyper_p2rpr1: n = nat_pow(p, 2 * r) + nat_pow(p, r) + 1; break;
        case FamilyId::hyper_2p2rpr1:
          n = 2 * (nat_pow(p, 2 * r) + nat_pow(p, r) + 1);
          break;
        default: n = nat_pow(p, 3 * r) - nat_pow(p, 2 * r) + nat_pow(p, r) - 1; break;
      }
      auto counter = hyper_counter(p, n);
      push(doc, {family_id_name(id), std::to_string(r), n.get_str(),
                 rep.gamma.get_str(), cell(counter), flag_for(rep.gamma, counter)});
    }
  }
  return doc;
}

std::vector<int> parse_cases(const std::string& spec, int max_case) {
  static const char* kRoman[] = {"i", "ii", "iii", "iv", "v"};
  std::set<int> picked;
  if (spec == "all") {
    for (int c = 1; c <= max_case; ++c) picked.insert(c);
  } else {
    std::size_t pos = 0;
    while (pos <= spec.size()) {
      std::size_t comma = spec.find(',', pos);
      std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                                     : comma - pos);
      int found = 0;
      for (int c = 1; c <= max_case; ++c)
        if (item == kRoman[c - 1]) found = c;
      if (found == 0) throw std::invalid_argument("unknown case selector: " + item);
      picked.insert(found);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return {picked.begin(), picked.end()};
}

// closed gamma for y^2 = x^n+1 or y^2 = x(x^n+1) from a correction term delta
Nat gamma_from_delta(std::uint64_t p, unsigned long h, const Nat& n, const Nat& delta) {
  Nat box = nat_pow(Nat((p + 1) / 2), h);
  if (delta > box) throw std::logic_error("correction term exceeds the digit box");
  return div_exact(n * (box - delta), nat_pow(p, h) - 1, "table gamma");
}

TableDoc table_hyper_correction(const TableOptions& opt) {
  TableDoc doc;
  doc.number = 4;
  doc.p = opt.p;
  doc.columns = {"case", "parity", "h", "alpha", "n", "delta", "closed", "counter",
                 "flag"};
  const std::uint64_t p = opt.p;

  struct Case {
    const char* label;
    std::uint64_t modulus;  // alpha must divide this
    bool odd_col, even_col;
  };
  const Case cases[] = {
      {"alpha | (p-1)/2", p > 2 ? (p - 1) / 2 : 0, false, true},
      {"alpha | (p+1)/2", p > 2 ? (p + 1) / 2 : 0, true, true},
      {"alpha | (p+3)/2, (p-1) nmid n", p > 2 ? (p + 3) / 2 : 0, true, true},
      {"alpha | (p+3)/2, (p-1) | n", p > 2 ? (p + 3) / 2 : 0, true, true},
      {"alpha | p-1, n odd", p > 2 ? p - 1 : 0, true, false},
  };

  // delta for case c at this instance, nullopt when a side condition fails
  auto delta_of = [&](int c, bool n_even, std::uint64_t alpha, const Nat& n,
                      unsigned long h) -> std::optional<Nat> {
    const Nat sgn = h % 2 == 0 ? 1 : -1;
    switch (c) {
      case 1: return Nat(alpha + 1);
      case 2: return n_even ? Nat(2 * alpha) : Nat(alpha);
      case 3:
        if (n % (p - 1) == 0) return std::nullopt;
        return (n_even ? Nat(2 * alpha) : Nat(alpha)) + sgn;
      case 4:
        if (n % (p - 1) != 0) return std::nullopt;
        return (n_even ? Nat(2 * alpha) : Nat(alpha)) + sgn * (1 - Nat(alpha));
      default:
        if (alpha % 2 != 0) return std::nullopt;  // (alpha+2)/2 must be integral
        return Nat(alpha / 2 + 1);
    }
  };

  for (int c : parse_cases(opt.alpha_cases, 5)) {
    const Case& cs = cases[c - 1];
    if (p == 2) {
      push_na2(doc, cs.label, "-", "table needs odd p");
      continue;
    }
    for (int want_even = 0; want_even <= 1; ++want_even) {
      if (want_even == 0 && !cs.odd_col) continue;
      if (want_even == 1 && !cs.even_col) continue;
      const std::string parity = want_even ? "even" : "odd";
      bool found = false;
      for (unsigned long h = 1; h <= opt.h_max; ++h) {
        const Nat q1 = nat_pow(p, h) - 1;
        for (std::uint64_t alpha : divisors_ge(cs.modulus, 1)) {
          if (q1 % alpha != 0) continue;
          const Nat n = div_exact(q1, alpha, "n");
          if ((n % 2 == 0) != (want_even == 1)) continue;
          if (!fits_u64(n) || mult_order(p, to_u64(n, "n")) != h) continue;
          auto delta = delta_of(c, want_even == 1, alpha, n, h);
          if (!delta) continue;
          Nat closed = gamma_from_delta(p, h, n, *delta);
          auto counter = hyper_counter(p, n);
          push(doc, {cs.label, parity, std::to_string(h), std::to_string(alpha),
                     n.get_str(), delta->get_str(), closed.get_str(), cell(counter),
                     flag_for(closed, counter)});
          found = true;
        }
      }
      if (!found) push_na2(doc, cs.label, parity, "no applicable instance in range");
    }
  }
  return doc;
}

TableDoc table_twisted_correction(const TableOptions& opt) {
  TableDoc doc;
  doc.number = 5;
  doc.p = opt.p;
  doc.columns = {"case", "h", "alpha", "n", "delta", "closed", "counter", "flag"};
  const std::uint64_t p = opt.p;

  struct Case {
    const char* label;
    std::uint64_t modulus;
  };
  const Case cases[] = {
      {"alpha | (p-1)/2", p > 2 ? (p - 1) / 2 : 0},
      {"alpha | (p+1)/2", p > 2 ? (p + 1) / 2 : 0},
      {"alpha | (p+3)/2, (p-1) nmid 2n or (p-1) | n", p > 2 ? (p + 3) / 2 : 0},
      {"alpha | (p+3)/2, (p-1) | 2n, (p-1) nmid n", p > 2 ? (p + 3) / 2 : 0},
  };

  for (int c : parse_cases(opt.alpha_cases, 4)) {
    const Case& cs = cases[c - 1];
    if (p == 2) {
      push_na(doc, cs.label, "table needs odd p");
      continue;
    }
    bool found = false;
    for (unsigned long h = 1; h <= opt.h_max; ++h) {
      const Nat q1 = nat_pow(p, h) - 1;
      for (std::uint64_t alpha : divisors_ge(cs.modulus, 1)) {
        if (alpha % 2 != 0) continue;  // the closed route needs an even alpha
        if (q1 % alpha != 0) continue;
        const Nat n = div_exact(q1, alpha, "n");
        if (n % 2 != 0) continue;
        if (!fits_u64(n) || mult_order(p, to_u64(n, "n")) != h) continue;
        const bool half_in = (2 * n) % (p - 1) == 0;
        const bool full_in = n % (p - 1) == 0;
        const Nat sgn = h % 2 == 0 ? 1 : -1;
        std::optional<Nat> delta;
        switch (c) {
          case 1: delta = Nat(1); break;
          case 2: delta = Nat(0); break;
          case 3:
            if (!(half_in && !full_in)) delta = sgn;
            break;
          default:
            if (half_in && !full_in) delta = sgn * (1 - Nat(alpha));
            break;
        }
        if (!delta) continue;
        Nat closed = gamma_from_delta(p, h, n, *delta);
        auto counter = twisted_counter(p, n);
        push(doc, {cs.label, std::to_string(h), std::to_string(alpha), n.get_str(),
                   delta->get_str(), closed.get_str(), cell(counter),
                   flag_for(closed, counter)});
        found = true;
      }
    }
    if (!found) push_na(doc, cs.label, "no applicable instance in range");
  }
  return doc;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

TableDoc make_table(int number, const TableOptions& opt) {
  if (!is_prime(opt.p)) throw std::invalid_argument("p is not prime");
  switch (number) {
    case 1: return table_fermat_families(opt);
    case 2: return table_zero_families(opt);
    case 3: return table_hyper_families(opt);
    case 4: return table_hyper_correction(opt);
    case 5: return table_twisted_correction(opt);
    default: throw std::invalid_argument("table number must be 1..5");
  }
}

namespace {

// pipes inside a cell would shift every later column
std::string md_cell(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string render_markdown(const TableDoc& doc) {
  std::string out = "|";
  for (const auto& c : doc.columns) out += " " + md_cell(c) + " |";
  out += "\n|";
  for (std::size_t i = 0; i < doc.columns.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& row : doc.rows) {
    out += "|";
    for (const auto& c : row.cells) out += " " + md_cell(c) + " |";
    out += "\n";
  }
  return out;
}

std::string render_csv(const TableDoc& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_cell(doc.columns[i]);
  }
  out += '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.cells.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(row.cells[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const TableDoc& doc) {
  std::string out = "{\"table\":" + std::to_string(doc.number) +
                    ",\"p\":" + std::to_string(doc.p) + ",\"columns\":[";
  for (std::size_t i = 0; i < doc.columns.size(); ++i) {
    if (i) out += ',';
    out += "\"" + json_escape(doc.columns[i]) + "\"";
  }
  out += "],\"rows\":[";
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    if (r) out += ',';
    out += '[';
    for (std::size_t i = 0; i < doc.rows[r].cells.size(); ++i) {
      if (i) out += ',';
      out += "\"" + json_escape(doc.rows[r].cells[i]) + "\"";
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

std::string render_table(const TableDoc& doc, const std::string& format) {
  if (format == "md") return render_markdown(doc);
  if (format == "csv") return render_csv(doc);
  if (format == "json") return render_json(doc);
  throw std::invalid_argument("format must be md, csv, or json");
}

}  // namespace fermat
