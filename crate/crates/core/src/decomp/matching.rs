use crate::error::{DecompError, ProductError};
use crate::graph::{Edge, EdgeSet, Vertex};
use crate::product::{ProductGraph, ProductKind};

/// The `n` perfect matchings `M_1..M_n` of a bundle `K_{n,n}`, realised as
/// cyclic shifts: `M_s` joins `(u_i, v_t)` to `(u_j, v_{(t + shift) mod n})`
/// where `u_i < u_j`.
///
/// `M_s` has shift `s` for `s < n` and `M_n` has shift 0 (the identity).
/// `M_{2r-1}` and `M_{2r}` have consecutive shifts, so their union is one
/// Hamiltonian cycle of the bundle (a perfect cycle) for `1 <= r <= n/2`.
/// For odd `n` the identity `M_n` is the unpaired matching.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatchingDecomposition {
    order: usize,
}

impl MatchingDecomposition {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "bundle order must be positive");
        MatchingDecomposition { order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Cyclic shift of the 1-based matching `index`.
    pub fn shift(&self, index: usize) -> usize {
        self.check(index);
        index % self.order
    }

    /// H-index matched to `t` on the far side by matching `index`.
    pub fn partner(&self, index: usize, t: Vertex) -> Vertex {
        (t + self.shift(index)) % self.order
    }

    pub fn identity_index(&self) -> usize {
        self.order
    }

    pub fn perfect_cycle_count(&self) -> usize {
        self.order / 2
    }

    /// Matching indices forming the `r`-th perfect cycle (1-based).
    pub fn cycle_pair(&self, r: usize) -> (usize, usize) {
        assert!(
            (1..=self.perfect_cycle_count()).contains(&r),
            "perfect cycle {r} out of range"
        );
        (2 * r - 1, 2 * r)
    }

    /// The matching left over when the order is odd.
    pub fn unpaired_index(&self) -> Option<usize> {
        (self.order % 2 == 1).then_some(self.order)
    }

    /// Matching `index` on a standalone `K_{n,n}` with left side `0..n` and
    /// right side `n..2n`.
    pub fn biclique_matching(&self, index: usize) -> EdgeSet {
        let n = self.order;
        (0..n)
            .map(|t| Edge::new(t, n + self.partner(index, t)))
            .collect()
    }

    pub fn biclique_cycle(&self, r: usize) -> EdgeSet {
        let (a, b) = self.cycle_pair(r);
        self.biclique_matching(a).union(&self.biclique_matching(b))
    }

    fn check(&self, index: usize) {
        assert!(
            (1..=self.order).contains(&index),
            "matching index {index} out of range 1..={}",
            self.order
        );
    }
}

/// Matching `index` realised on the bundle of `g_edge` in a lexicographic product.
pub fn bundle_matching(
    p: &ProductGraph,
    g_edge: Edge,
    dec: &MatchingDecomposition,
    index: usize,
) -> Result<Vec<Edge>, DecompError> {
    check_bundle_args(p, g_edge, dec, index)?;
    Ok((0..p.n2())
        .map(|t| p.edge((g_edge.lo(), t), (g_edge.hi(), dec.partner(index, t))))
        .collect())
}

/// The `r`-th perfect cycle of the bundle of `g_edge`.
pub fn perfect_cycle(
    p: &ProductGraph,
    g_edge: Edge,
    dec: &MatchingDecomposition,
    r: usize,
) -> Result<EdgeSet, DecompError> {
    if r == 0 || r > dec.perfect_cycle_count() {
        return Err(ProductError::IndexOutOfRange {
            what: "perfect cycle",
            index: r,
            limit: dec.perfect_cycle_count(),
        }
        .into());
    }
    let (a, b) = dec.cycle_pair(r);
    let mut cycle: EdgeSet = bundle_matching(p, g_edge, dec, a)?.into_iter().collect();
    cycle.extend(bundle_matching(p, g_edge, dec, b)?);
    Ok(cycle)
}

fn check_bundle_args(
    p: &ProductGraph,
    g_edge: Edge,
    dec: &MatchingDecomposition,
    index: usize,
) -> Result<(), DecompError> {
    if p.kind() != ProductKind::Lexicographic {
        return Err(
            ProductError::Unsupported("bundle matchings need a lexicographic product").into(),
        );
    }
    if dec.order() != p.n2() {
        return Err(DecompError::FactorMismatch {
            expected: p.n2(),
            found: dec.order(),
        });
    }
    if index == 0 || index > dec.order() {
        return Err(ProductError::IndexOutOfRange {
            what: "matching",
            index,
            limit: dec.order(),
        }
        .into());
    }
    if !p.factor_g().contains(&g_edge) {
        return Err(ProductError::NotAFactorEdge(g_edge).into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Degree 2 everywhere on the `2n` vertices and connected.
    fn is_hamiltonian_cycle(n: usize, edges: &EdgeSet) -> bool {
        let adj = edges.adjacency(2 * n);
        edges.len() == 2 * n
            && adj.iter().all(|a| a.len() == 2)
            && edges.components(2 * n).len() == 1
    }

    #[test]
    fn identity_is_last() {
        let dec = MatchingDecomposition::new(5);
        assert_eq!(dec.shift(5), 0);
        assert_eq!(dec.shift(1), 1);
        assert_eq!(dec.unpaired_index(), Some(5));
        assert_eq!(MatchingDecomposition::new(4).unpaired_index(), None);
    }

    #[test]
    fn order_two_cycle_is_c4() {
        let dec = MatchingDecomposition::new(2);
        let c = dec.biclique_cycle(1);
        assert!(is_hamiltonian_cycle(2, &c));
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn order_four_two_cycles_cover_everything() {
        let dec = MatchingDecomposition::new(4);
        let (c1, c2) = (dec.biclique_cycle(1), dec.biclique_cycle(2));
        assert!(is_hamiltonian_cycle(4, &c1) && is_hamiltonian_cycle(4, &c2));
        assert!(c1.is_disjoint(&c2));
        assert_eq!(c1.union(&c2).len(), 16);
    }

    #[test]
    fn order_three_one_cycle_and_a_matching() {
        let dec = MatchingDecomposition::new(3);
        assert_eq!(dec.perfect_cycle_count(), 1);
        let c = dec.biclique_cycle(1);
        assert!(is_hamiltonian_cycle(3, &c));
        let m = dec.biclique_matching(dec.unpaired_index().unwrap());
        assert_eq!(m.len(), 3);
        assert!(m.is_disjoint(&c));
        assert_eq!(c.union(&m).len(), 9);
    }

    #[test]
    fn matchings_partition_the_biclique() {
        for n in 1..=12 {
            let dec = MatchingDecomposition::new(n);
            let mut all = EdgeSet::new();
            for s in 1..=n {
                let m = dec.biclique_matching(s);
                assert_eq!(m.len(), n);
                assert!(m.is_disjoint(&all));
                all = all.union(&m);
            }
            assert_eq!(all.len(), n * n);
        }
    }
}
