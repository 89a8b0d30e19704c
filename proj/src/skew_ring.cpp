#include "isgal/skew_ring.hpp"

#include <algorithm>

#include "isgal/matrix.hpp"

namespace isgal {
namespace {

// shared builder: mul(s, t) < 0 marks an undefined product
template <typename Mul>
SkewRing build_ring(const Field& field, int nelem, const std::vector<std::string>& names,
                    const std::vector<std::vector<int>>& supports,
                    const std::vector<std::vector<int>>& sigma, Mul mul) {
  SkewRing ring;
  ring.field = field;
  for (int s = 0; s < nelem; ++s)
    for (int i : supports[s]) {
      ring.basis.emplace_back(s, i);
      ring.basis_names.push_back("e" + std::to_string(i) + " u_" + names[s]);
    }
  const int d = ring.dim();
  ring.prod.assign(d, std::vector<int>(d, -1));
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      const auto [s, i] = ring.basis[p];
      const auto [t, j] = ring.basis[q];
      const int st = mul(s, t);
      if (st < 0) continue;
      // (e_i u_s)(e_j u_t) = e_i u_{st} precisely when sigma_s(j) = i
      if (sigma[s][j - 1] != i) continue;
      const int r = ring.basis_index(st, i);
      if (r < 0) throw Error("skew ring product escapes the basis at " + ring.basis_names[p]);
      ring.prod[p][q] = r;
    }
  return ring;
}

std::vector<std::vector<int>> sigma_table(const Action& b) {
  std::vector<std::vector<int>> out;
  for (int s = 0; s < b.semigroup().size(); ++s) {
    std::vector<int> row(b.algebra().n);
    for (int i = 1; i <= b.algebra().n; ++i) row[i - 1] = b.sigma(s, i);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

int SkewRing::basis_index(int elem, int point) const {
  for (int k = 0; k < dim(); ++k)
    if (basis[k] == std::make_pair(elem, point)) return k;
  return -1;
}

SkewRing build_skew_semigroup_ring(const Action& b) {
  const InverseSemigroup& s = b.semigroup();
  std::vector<std::string> names;
  std::vector<std::vector<int>> supports;
  for (int t = 0; t < s.size(); ++t) {
    names.push_back(s.name(t));
    supports.push_back(b.support(t));
  }
  return build_ring(b.algebra().field, s.size(), names, supports, sigma_table(b),
                    [&](int x, int y) { return s.mul(x, y); });
}

SkewRing build_skew_groupoid_ring(const GroupoidAction& b) {
  const OrderedGroupoid& g = b.groupoid();
  std::vector<std::vector<int>> supports, sigma;
  for (int t = 0; t < g.size(); ++t) {
    supports.push_back(b.support(t));
    std::vector<int> row(b.algebra().n);
    for (int i = 1; i <= b.algebra().n; ++i) row[i - 1] = b.sigma(t, i);
    sigma.push_back(std::move(row));
  }
  return build_ring(b.algebra().field, g.size(), g.names, supports, sigma,
                    [&](int x, int y) { return g.pmul[x][y]; });
}

std::vector<std::vector<Scalar>> relation_ideal(const Action& b, const SkewRing& ring) {
  const InverseSemigroup& sg = b.semigroup();
  std::vector<std::vector<Scalar>> gens;
  for (int s = 0; s < sg.size(); ++s)
    for (int t = 0; t < sg.size(); ++t) {
      if (s == t || !sg.leq(s, t)) continue;
      for (int i : b.support(s)) {
        std::vector<Scalar> v(ring.dim(), Scalar::zero(ring.field));
        v[ring.basis_index(s, i)] += Scalar::one(ring.field);
        const int k = ring.basis_index(t, i);
        if (k < 0) throw Error("relation ideal: e_i u_t missing for s <= t");
        v[k] -= Scalar::one(ring.field);
        const bool zero = std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c.is_zero(); });
        if (!zero) gens.push_back(std::move(v));
      }
    }
  return gens;
}

bool check_associativity(const SkewRing& ring, std::string* witness) {
  const int d = ring.dim();
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        const int xy = ring.prod[x][y];
        const int yz = ring.prod[y][z];
        const int lhs = xy < 0 ? -1 : ring.prod[xy][z];
        const int rhs = yz < 0 ? -1 : ring.prod[x][yz];
        if (lhs != rhs) {
          if (witness)
            *witness = "(" + ring.basis_names[x] + ", " + ring.basis_names[y] + ", " +
                       ring.basis_names[z] + ")";
          return false;
        }
      }
  return true;
}

CrossedProductIso crossed_product_iso(const Action& b) {
  const SkewRing sg_ring = build_skew_semigroup_ring(b);
  const SkewRing gpd_ring = build_skew_groupoid_ring(groupoid_action_of(b));
  CrossedProductIso out;
  out.bijective = sg_ring.basis == gpd_ring.basis;
  if (!out.bijective) {
    out.witness = "basis mismatch";
    return out;
  }
  out.multiplicative = true;
  for (int p = 0; p < sg_ring.dim() && out.multiplicative; ++p)
    for (int q = 0; q < sg_ring.dim(); ++q)
      if (sg_ring.prod[p][q] != gpd_ring.prod[p][q]) {
        out.multiplicative = false;
        out.witness = "(" + sg_ring.basis_names[p] + ")(" + sg_ring.basis_names[q] + ")";
        break;
      }
  return out;
}

bool GaloisTheoremReport::all_ok() const {
  return supported && coordinates_valid && j.bijective && j_multiplicative && phi.bijective &&
         t_generates && tau.surjective;
}

namespace {

LinearMapCheck check_of(const Field& f, const std::vector<std::vector<Scalar>>& columns, int rows) {
  LinearMapCheck c;
  c.rows = rows;
  c.cols = static_cast<int>(columns.size());
  c.rank = span_rank(f, columns);
  c.injective = c.rank == c.cols;
  c.surjective = c.rank == c.rows;
  c.bijective = c.injective && c.surjective;
  return c;
}

}  // namespace

GaloisTheoremReport galois_theorem_checks(const Action& b, const GaloisCoordinates& coords) {
  GaloisTheoremReport rep;
  const Field f = b.algebra().field;
  const int n = b.algebra().n;
  rep.coordinates_valid = check_galois_coordinates(b, coords);

  if (fixed_subalgebra(b).num_blocks() != 1) {
    rep.supported = false;
    rep.note = "fixed subalgebra has more than one block; freeness arguments unavailable";
    return rep;
  }

  const SkewRing ring = build_skew_semigroup_ring(b);
  const int d = ring.dim();

  // j(e_i u_s) acts on A as e_k -> [k = sigma_s^-1(i)] e_i: a single matrix
  // unit; bijectivity is a rank computation on the flattened matrices
  std::vector<std::vector<Scalar>> jmats;
  for (int p = 0; p < d; ++p) {
    const auto [s, i] = ring.basis[p];
    std::vector<Scalar> flat(static_cast<size_t>(n) * n, Scalar::zero(f));
    for (int k = 1; k <= n; ++k)
      if (b.sigma(s, k) == i) flat[static_cast<size_t>(i - 1) * n + (k - 1)] = Scalar::one(f);
    jmats.push_back(std::move(flat));
  }
  rep.j = check_of(f, jmats, n * n);

  rep.j_multiplicative = true;
  auto matmul = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& c) {
    std::vector<Scalar> r(static_cast<size_t>(n) * n, Scalar::zero(f));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (a[static_cast<size_t>(i) * n + k].is_zero()) continue;
        for (int j = 0; j < n; ++j)
          r[static_cast<size_t>(i) * n + j] +=
              a[static_cast<size_t>(i) * n + k] * c[static_cast<size_t>(k) * n + j];
      }
    return r;
  };
  for (int p = 0; p < d && rep.j_multiplicative; ++p)
    for (int q = 0; q < d; ++q) {
      const std::vector<Scalar> lhs = matmul(jmats[p], jmats[q]);
      const int pq = ring.prod[p][q];
      const std::vector<Scalar> rhs =
          pq < 0 ? std::vector<Scalar>(static_cast<size_t>(n) * n, Scalar::zero(f)) : jmats[pq];
      if (lhs != rhs) {
        rep.j_multiplicative = false;
        break;
      }
    }

  // phi(e_i (x) e_j) has a one in coordinate (s, i) whenever sigma_s(j) = i
  std::vector<std::vector<Scalar>> phicols;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::vector<Scalar> col(d, Scalar::zero(f));
      for (int p = 0; p < d; ++p) {
        const auto [s, k] = ring.basis[p];
        if (k == i && b.sigma(s, j) == i) col[p] = Scalar::one(f);
      }
      phicols.push_back(std::move(col));
    }
  rep.phi = check_of(f, phicols, d);

  // t = sum over basis of e_i u_s; span of emb(e_i) t emb(e_j)
  auto embed = [&](int point) {
    // e_point u_e for the unique idempotent whose support holds the point
    for (int e : b.semigroup().idempotents()) {
      const auto& sup = b.support(e);
      if (std::binary_search(sup.begin(), sup.end(), point)) return ring.basis_index(e, point);
    }
    throw Error("galois_theorem_checks: point outside every idempotent support");
  };
  std::vector<std::vector<Scalar>> spans;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int pi = embed(i), pj = embed(j);
      std::vector<Scalar> v(d, Scalar::zero(f));
      for (int p = 0; p < d; ++p) {
        const int tp = ring.prod[pi][p];
        if (tp < 0) continue;
        const int tpq = ring.prod[tp][pj];
        if (tpq >= 0) v[tpq] += Scalar::one(f);
      }
      spans.push_back(std::move(v));
    }
  rep.t_generates = span_rank(f, spans) == d;

  // tau'(e_i (x) e_j) = sum over s with sigma_s(j) = i of e_i u_s
  std::vector<std::vector<Scalar>> taucols;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::vector<Scalar> col(d, Scalar::zero(f));
      for (int p = 0; p < d; ++p) {
        const auto [s, k] = ring.basis[p];
        if (k == i && b.sigma(s, j) == i) col[p] += Scalar::one(f);
      }
      taucols.push_back(std::move(col));
    }
  rep.tau = check_of(f, taucols, d);
  return rep;
}

}  // namespace isgal
