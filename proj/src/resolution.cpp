#include "stabres/resolution.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace stabres {

namespace {

// Shared skeleton: ranks, basis ids per homological degree, multidegrees.
FreeComplex skeleton(const SymbolPoset& P) {
  FreeComplex F;
  const std::size_t top = P.max_rank();
  F.ranks.assign(top + 1, 0);
  F.basis.assign(top + 1, {});
  F.basis_mdeg.assign(top + 1, {});
  F.ranks[0] = 1;
  F.basis_mdeg[0].push_back(Multidegree::one(P.ideal().var_count()));
  for (std::size_t i = 1; i <= top; ++i) {
    F.basis[i] = P.ids_of_rank(i);
    F.ranks[i] = F.basis[i].size();
    for (std::size_t id : F.basis[i]) F.basis_mdeg[i].push_back(P.eta(id));
  }
  F.diffs.assign(top + 1, Differential{});
  for (std::size_t i = 1; i <= top; ++i) {
    F.diffs[i].rows = F.ranks[i - 1];
    F.diffs[i].cols = F.ranks[i];
  }
  return F;
}

std::map<std::size_t, std::size_t> position_of(const std::vector<std::size_t>& ids) {
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = i;
  return pos;
}

void sort_entries(Differential& D) {
  std::sort(D.entries.begin(), D.entries.end(), [](const DiffEntry& a, const DiffEntry& b) {
    return std::tie(a.col, a.row) < std::tie(b.col, b.row);
  });
}

}  // namespace

FreeComplex build_resolution(const SymbolPoset& P) {
  FreeComplex F = skeleton(P);
  const std::size_t top = P.max_rank();
  if (top >= 1) {
    // homological degree 1: the augmentation sends each atom to its generator
    for (std::size_t col = 0; col < F.basis[1].size(); ++col)
      F.diffs[1].entries.push_back(DiffEntry{0, col, 1, P.eta_monomial(F.basis[1][col])});
  }
  for (std::size_t i = 2; i <= top; ++i) {
    auto pos = position_of(F.basis[i - 1]);
    // coefficients accumulate per cover edge; coinciding targets would merge
    std::map<std::pair<std::size_t, std::size_t>, int> acc;
    for (std::size_t col = 0; col < F.basis[i].size(); ++col) {
      const std::size_t hi = F.basis[i][col];
      for (std::size_t lo : P.covers_below(hi))
        acc[{pos.at(lo), col}] += expected_cover_sign(P, hi, lo);
    }
    for (const auto& [rc, coeff] : acc) {
      if (coeff == 0) continue;
      const std::size_t hi = F.basis[i][rc.second];
      const std::size_t lo = F.basis[i - 1][rc.first];
      F.diffs[i].entries.push_back(
          DiffEntry{rc.first, rc.second, coeff, quotient(P.eta_monomial(hi), P.eta_monomial(lo))});
    }
    sort_entries(F.diffs[i]);
  }
  return F;
}

FreeComplex build_resolution_ek(const SymbolPoset& P) {
  const MonomialIdeal& N = P.ideal();
  FreeComplex F = skeleton(P);
  const std::size_t top = P.max_rank();
  if (top >= 1) {
    for (std::size_t col = 0; col < F.basis[1].size(); ++col) {
      const AdmissibleSymbol& s = P.symbol(F.basis[1][col]);
      F.diffs[1].entries.push_back(
          DiffEntry{0, col, 1, N.generator(static_cast<std::size_t>(s.gen))});
    }
  }
  for (std::size_t i = 2; i <= top; ++i) {
    auto pos = position_of(F.basis[i - 1]);
    std::map<std::pair<std::size_t, std::size_t>, std::pair<int, Monomial>> acc;
    auto add = [&](std::size_t row, std::size_t col, int coeff, const Monomial& mono) {
      auto it = acc.find({row, col});
      if (it == acc.end()) {
        acc.emplace(std::make_pair(row, col), std::make_pair(coeff, mono));
      } else {
        // coinciding targets carry the same monomial and merge by coefficient
        it->second.first += coeff;
      }
    };
    for (std::size_t col = 0; col < F.basis[i].size(); ++col) {
      const AdmissibleSymbol& s = P.symbol(F.basis[i][col]);
      const Monomial& m = N.generator(static_cast<std::size_t>(s.gen));
      const std::size_t q = s.index_set.size();
      for (std::size_t t = 0; t < q; ++t) {
        const std::uint32_t ip = s.index_set[t];
        const int sign = ((t + 1) % 2 == 0) ? 1 : -1;  // (-1)^p with p = t+1
        std::vector<std::uint32_t> J = s.index_set;
        J.erase(J.begin() + static_cast<std::ptrdiff_t>(t));

        AdmissibleSymbol keep{J, s.gen};
        add(pos.at(P.id_of(keep)), col, sign, Monomial::one(N.var_count()).times_var(ip));

        Decomposition dec = decompose(N, m.times_var(ip));
        const std::size_t gmax = dec.g.max_index();
        const bool admissible = J.empty() || J.back() < gmax;
        if (admissible) {
          AdmissibleSymbol moved{J, static_cast<std::int32_t>(dec.gen_index)};
          add(pos.at(P.id_of(moved)), col, -sign, dec.y);
        }
      }
    }
    for (const auto& [rc, cm] : acc) {
      if (cm.first == 0) continue;
      F.diffs[i].entries.push_back(DiffEntry{rc.first, rc.second, cm.first, cm.second});
    }
    sort_entries(F.diffs[i]);
  }
  return F;
}

bool verify_complex(const FreeComplex& F) {
  for (std::size_t i = 2; i < F.diffs.size(); ++i) {
    const Differential& A = F.diffs[i - 1];
    const Differential& B = F.diffs[i];
    std::vector<std::vector<std::pair<std::size_t, const DiffEntry*>>> a_by_col(A.cols);
    for (const DiffEntry& e : A.entries) a_by_col[e.col].emplace_back(e.row, &e);
    std::map<std::tuple<std::size_t, std::size_t, std::vector<Exponent>>, long long> acc;
    for (const DiffEntry& eb : B.entries)
      for (const auto& [row, ea] : a_by_col[eb.row])
        acc[{row, eb.col, (ea->mono * eb.mono).exponents()}] +=
            static_cast<long long>(ea->coeff) * eb.coeff;
    for (const auto& [key, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

bool verify_minimal(const FreeComplex& F) {
  for (const Differential& D : F.diffs)
    for (const DiffEntry& e : D.entries)
      if (e.coeff != 0 && e.mono.is_one()) return false;
  return true;
}

Multidegree bounding_box(const FreeComplex& F) {
  if (F.basis_mdeg.empty() || F.basis_mdeg[0].empty())
    throw DomainError("bounding box of an empty complex");
  const std::size_t d = F.basis_mdeg[0][0].var_count();
  std::vector<Exponent> corner(d, 0);
  for (const auto& degs : F.basis_mdeg)
    for (const Multidegree& a : degs)
      for (std::size_t i = 0; i < d; ++i)
        corner[i] = std::max(corner[i], a.exponents()[i]);
  for (std::size_t i = 0; i < d; ++i) corner[i] += 1;
  return Multidegree(std::move(corner));
}

std::vector<Multidegree> box_degrees(const Multidegree& corner) {
  std::vector<Multidegree> out;
  const std::size_t d = corner.var_count();
  std::vector<Exponent> a(d, 0);
  while (true) {
    out.push_back(Multidegree(a));
    std::size_t i = 0;
    while (i < d) {
      if (a[i] < corner.exponents()[i]) {
        ++a[i];
        break;
      }
      a[i] = 0;
      ++i;
    }
    if (i == d) break;
  }
  return out;
}

std::vector<Multidegree> degrees_for_depth(const FreeComplex& F, Depth depth,
                                           std::uint64_t seed, std::size_t external) {
  std::vector<Multidegree> out;
  if (depth == Depth::quick) {
    for (const auto& degs : F.basis_mdeg)
      for (const Multidegree& a : degs) out.push_back(a);
    std::sort(out.begin(), out.end(),
              [](const Multidegree& a, const Multidegree& b) { return LexLess{}(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  Multidegree corner = bounding_box(F);
  out = box_degrees(corner);
  if (depth == Depth::exhaustive) {
    std::mt19937_64 rng(seed);
    const std::size_t d = corner.var_count();
    for (std::size_t t = 0; t < external; ++t) {
      std::vector<Exponent> a(d);
      for (std::size_t i = 0; i < d; ++i)
        a[i] = static_cast<Exponent>(rng() % (corner.exponents()[i] + 4));
      out.push_back(Multidegree(std::move(a)));
    }
  }
  return out;
}

CheckReport verify_exact(const MonomialIdeal& N, const FreeComplex& F, const PrimeField& Fp,
                         const std::vector<Multidegree>& degrees) {
  CheckReport rep("exactness");
  const std::size_t top = F.length();
  for (const Multidegree& a : degrees) {
    ++rep.checked;
    // slice basis: elements with eta componentwise below a
    std::vector<std::vector<std::size_t>> keep(top + 1);
    std::vector<std::vector<std::size_t>> pos(top + 1);
    for (std::size_t i = 0; i <= top; ++i) {
      pos[i].assign(F.ranks[i], SIZE_MAX);
      for (std::size_t j = 0; j < F.ranks[i]; ++j)
        if (divides(F.basis_mdeg[i][j], a)) {
          pos[i][j] = keep[i].size();
          keep[i].push_back(j);
        }
    }
    ReducedChainComplex C;
    const std::size_t qdim = N.contains(a) ? 0 : 1;
    C.dims.push_back(qdim);
    for (std::size_t i = 0; i <= top; ++i) C.dims.push_back(keep[i].size());
    // augmentation: F_0(a) -> (R/N)(a)
    SignedBoundaryMatrix aug;
    aug.rows = qdim;
    aug.cols = keep[0].size();
    if (qdim == 1 && !keep[0].empty()) aug.entries.emplace_back(0, 0, 1);
    C.boundaries.push_back(std::move(aug));
    for (std::size_t i = 1; i <= top; ++i) {
      SignedBoundaryMatrix B;
      B.rows = keep[i - 1].size();
      B.cols = keep[i].size();
      for (const DiffEntry& e : F.diffs[i].entries) {
        if (pos[i][e.col] == SIZE_MAX || pos[i - 1][e.row] == SIZE_MAX) continue;
        B.entries.emplace_back(pos[i - 1][e.row], pos[i][e.col], e.coeff);
      }
      C.boundaries.push_back(std::move(B));
    }
    std::vector<std::size_t> h = reduced_homology_ranks(C, Fp);
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k] == 0) continue;
      std::ostringstream os;
      os << "nonzero homology (dim " << h[k] << ") at position " << static_cast<long long>(k) - 1
         << " in multidegree (";
      for (std::size_t i = 0; i < a.var_count(); ++i)
        os << (i ? "," : "") << a.exponents()[i];
      os << ")";
      rep.fail(os.str());
    }
  }
  return rep;
}

BettiTable betti_table(const FreeComplex& F) {
  BettiTable B;
  for (std::size_t i = 0; i < F.basis_mdeg.size(); ++i) {
    for (const Multidegree& a : F.basis_mdeg[i]) {
      B.graded[{i, a.exponents()}] += 1;
      B.total[{i, a.total_degree()}] += 1;
    }
  }
  return B;
}

std::string betti_text(const BettiTable& B) {
  std::size_t max_i = 0;
  long long max_slope = 0;
  for (const auto& [key, cnt] : B.total) {
    max_i = std::max(max_i, key.first);
    max_slope = std::max(max_slope,
                         static_cast<long long>(key.second) - static_cast<long long>(key.first));
  }
  auto cell = [&](long long slope, std::size_t i) -> std::string {
    auto it = B.total.find({i, static_cast<std::uint64_t>(slope + static_cast<long long>(i))});
    return it == B.total.end() ? "." : std::to_string(it->second);
  };
  std::vector<std::size_t> width(max_i + 1, 1);
  std::vector<std::string> totals(max_i + 1, "0");
  for (std::size_t i = 0; i <= max_i; ++i) {
    std::size_t t = 0;
    for (const auto& [key, cnt] : B.total)
      if (key.first == i) t += cnt;
    totals[i] = std::to_string(t);
    width[i] = std::max(width[i], totals[i].size());
    width[i] = std::max(width[i], std::to_string(i).size());
    for (long long s = 0; s <= max_slope; ++s) width[i] = std::max(width[i], cell(s, i).size());
  }
  std::ostringstream os;
  auto row = [&](const std::string& head, auto value) {
    os << head;
    for (std::size_t i = 0; i <= max_i; ++i) {
      std::string v = value(i);
      os << ' ' << std::string(width[i] - v.size(), ' ') << v;
    }
    os << '\n';
  };
  row("      ", [&](std::size_t i) { return std::to_string(i); });
  row("total:", [&](std::size_t i) { return totals[i]; });
  for (long long s = 0; s <= max_slope; ++s) {
    std::ostringstream head;
    head << std::string(5 >= std::to_string(s).size() ? 5 - std::to_string(s).size() : 0, ' ')
         << s << ':';
    row(head.str(), [&](std::size_t i) { return cell(s, i); });
  }
  return os.str();
}

}  // namespace stabres
