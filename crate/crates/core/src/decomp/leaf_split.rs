use crate::error::DecompError;
use crate::graph::{Edge, EdgeSet, Graph, Vertex};

use super::require_spanning_tree;

/// A spanning tree of H cut into a kept subtree on `ceil(n/2)` vertices and
/// the forest of edges removed by repeated leaf deletion.
///
/// Seen as a spanning forest of H, the removed edges form exactly
/// `ceil(n/2)` components, each holding one kept vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafSplit {
    source: EdgeSet,
    in_kept: Vec<bool>,
    kept_vertices: Vec<Vertex>,
    kept: EdgeSet,
    forest: EdgeSet,
}

/// Deletes the smallest-index leaf until `ceil(n/2)` vertices remain.
pub fn leaf_split(host: &Graph, tree: &EdgeSet) -> Result<LeafSplit, DecompError> {
    require_spanning_tree(host, tree)?;
    let n = host.n();
    let target = n.div_ceil(2);
    let adj = tree.adjacency(n);
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    for _ in target..n {
        let leaf = (0..n)
            .find(|&v| alive[v] && degree[v] == 1)
            .expect("a tree with >= 2 vertices has a leaf");
        let neighbor = adj[leaf]
            .iter()
            .copied()
            .find(|&w| alive[w])
            .expect("leaf has one live neighbour");
        alive[leaf] = false;
        degree[leaf] = 0;
        degree[neighbor] -= 1;
    }
    let kept: Vec<Vertex> = (0..n).filter(|&v| alive[v]).collect();
    LeafSplit::from_kept(host, tree, &kept)
}

impl LeafSplit {
    /// Builds the split whose kept subtree is the one induced on `kept_vertices`.
    pub fn from_kept(
        host: &Graph,
        tree: &EdgeSet,
        kept_vertices: &[Vertex],
    ) -> Result<Self, DecompError> {
        require_spanning_tree(host, tree)?;
        let n = host.n();
        let mut in_kept = vec![false; n];
        for &v in kept_vertices {
            if v >= n || in_kept[v] {
                return Err(DecompError::InvalidSplit(format!(
                    "kept vertex {v} repeated or out of range"
                )));
            }
            in_kept[v] = true;
        }
        if kept_vertices.len() != n.div_ceil(2) {
            return Err(DecompError::InvalidSplit(format!(
                "kept subtree has {} vertices, expected {}",
                kept_vertices.len(),
                n.div_ceil(2)
            )));
        }
        let (kept, forest): (Vec<Edge>, Vec<Edge>) = tree
            .iter()
            .partition(|e| in_kept[e.lo()] && in_kept[e.hi()]);
        if kept.len() + 1 != kept_vertices.len() {
            return Err(DecompError::InvalidSplit(
                "kept vertices do not induce a connected subtree".to_string(),
            ));
        }
        let mut kept_vertices = kept_vertices.to_vec();
        kept_vertices.sort_unstable();
        let split = LeafSplit {
            source: tree.clone(),
            in_kept,
            kept_vertices,
            kept: kept.into_iter().collect(),
            forest: forest.into_iter().collect(),
        };
        debug_assert!(split.forest_components().iter().all(|c| c
            .iter()
            .filter(|&&v| split.is_kept(v))
            .count()
            == 1));
        Ok(split)
    }

    pub fn n(&self) -> usize {
        self.in_kept.len()
    }

    pub fn source(&self) -> &EdgeSet {
        &self.source
    }

    pub fn is_kept(&self, v: Vertex) -> bool {
        self.in_kept[v]
    }

    /// `V(T_a)`, sorted.
    pub fn kept_vertices(&self) -> &[Vertex] {
        &self.kept_vertices
    }

    /// `V(H) \ V(T_a)`, sorted.
    pub fn removed_vertices(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| !self.in_kept[v]).collect()
    }

    /// Smallest kept vertex; the extra crossing point used when a fiber keeps
    /// the subtree.
    pub fn min_kept(&self) -> Vertex {
        self.kept_vertices[0]
    }

    /// `E(T_a)`.
    pub fn kept_edges(&self) -> &EdgeSet {
        &self.kept
    }

    /// `E(F_b)`.
    pub fn forest_edges(&self) -> &EdgeSet {
        &self.forest
    }

    /// Vertices incident to a removed edge.
    pub fn forest_vertices(&self) -> Vec<Vertex> {
        self.forest.vertices()
    }

    /// Components of the removed forest as a spanning forest of H.
    pub fn forest_components(&self) -> Vec<Vec<Vertex>> {
        self.forest.components(self.n())
    }

    /// Kept vertices that anchor at least one removed edge.
    pub fn attachment_roots(&self) -> Vec<Vertex> {
        self.forest_components()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                *c.iter()
                    .find(|&&v| self.in_kept[v])
                    .expect("one kept vertex per component")
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    fn edges(pairs: &[(usize, usize)]) -> EdgeSet {
        pairs.iter().map(|&(a, b)| Edge::new(a, b)).collect()
    }

    fn as_host(n: usize, t: &EdgeSet) -> Graph {
        Graph::from_edges(n, t.iter().copied().collect()).unwrap()
    }

    #[test]
    fn seven_vertex_example_matches_published_split() {
        // v1..v7 relabelled to 0..6.
        let t = edges(&[(0, 3), (1, 5), (2, 5), (3, 4), (3, 5), (3, 6)]);
        let split = leaf_split(&as_host(7, &t), &t).unwrap();
        assert_eq!(split.kept_vertices(), &[3, 4, 5, 6]);
        assert_eq!(split.kept_edges(), &edges(&[(3, 4), (3, 5), (3, 6)]));
        assert_eq!(split.forest_edges(), &edges(&[(0, 3), (1, 5), (2, 5)]));
        assert_eq!(split.attachment_roots(), vec![3, 5]);
    }

    #[test]
    fn path_of_four() {
        let p4 = generate(FamilySpec::Path { n: 4 }).unwrap();
        let split = leaf_split(&p4, &p4.all_edges()).unwrap();
        assert_eq!(split.kept_vertices(), &[2, 3]);
        assert_eq!(split.forest_edges().len(), 2);
        assert_eq!(split.forest_components(), vec![vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn single_edge() {
        let k2 = generate(FamilySpec::Complete { n: 2 }).unwrap();
        let split = leaf_split(&k2, &k2.all_edges()).unwrap();
        assert_eq!(split.kept_vertices().len(), 1);
        assert!(split.kept_edges().is_empty());
        assert_eq!(split.forest_edges(), &k2.all_edges());
    }

    #[test]
    fn single_vertex() {
        let k1 = generate(FamilySpec::Complete { n: 1 }).unwrap();
        let split = leaf_split(&k1, &EdgeSet::new()).unwrap();
        assert_eq!(split.kept_vertices(), &[0]);
        assert!(split.forest_edges().is_empty());
    }

    #[test]
    fn from_kept_validates() {
        let p4 = generate(FamilySpec::Path { n: 4 }).unwrap();
        let t = p4.all_edges();
        assert!(LeafSplit::from_kept(&p4, &t, &[1, 2]).is_ok());
        assert!(matches!(
            LeafSplit::from_kept(&p4, &t, &[0, 2]),
            Err(DecompError::InvalidSplit(_))
        ));
        assert!(LeafSplit::from_kept(&p4, &t, &[0, 1, 2]).is_err());
    }

    #[test]
    fn rejects_non_tree_input() {
        let c4 = generate(FamilySpec::Cycle { n: 4 }).unwrap();
        assert!(matches!(
            leaf_split(&c4, &c4.all_edges()),
            Err(DecompError::NotSpanningTree(_))
        ));
    }
}
