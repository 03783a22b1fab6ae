//! The height order on little 2-cubes and its linear extensions, which fix
//! the composition order of the knot action.

use serde::{Deserialize, Serialize};

use super::config::{heights_t, CubeConfig, Mode};
use crate::error::CubeError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Lower cubes come first in the ordering permutation.
    #[default]
    Standard,
    /// Upper cubes come first.
    Reverse,
}

/// A transitively closed strict order on `size` cubes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialOrderDag {
    size: usize,
    below: Vec<Vec<bool>>,
}

impl PartialOrderDag {
    /// Transitive closure of the given generating pairs. Returns `None` when
    /// the closure has a cycle.
    pub fn from_generators(size: usize, generators: &[(usize, usize)]) -> Option<Self> {
        let mut below = vec![vec![false; size]; size];
        for &(i, j) in generators {
            below[i][j] = true;
        }
        for k in 0..size {
            for i in 0..size {
                if below[i][k] {
                    for j in 0..size {
                        if below[k][j] {
                            below[i][j] = true;
                        }
                    }
                }
            }
        }
        if (0..size).any(|i| below[i][i]) {
            return None;
        }
        Some(PartialOrderDag { size, below })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Whether `i` strictly precedes `j`.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.below[i][j]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.below[i][j] || self.below[j][i]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.size {
            for j in 0..self.size {
                if self.below[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn reversed(&self) -> PartialOrderDag {
        let mut below = vec![vec![false; self.size]; self.size];
        for (i, row) in self.below.iter().enumerate() {
            for (j, &b) in row.iter().enumerate() {
                below[j][i] = b;
            }
        }
        PartialOrderDag {
            size: self.size,
            below,
        }
    }

    /// Whether the sequence lists every element once and never puts an
    /// element after one it precedes.
    pub fn is_extension(&self, sequence: &[usize]) -> bool {
        if sequence.len() != self.size {
            return false;
        }
        let mut seen = vec![false; self.size];
        for (p, &a) in sequence.iter().enumerate() {
            if a >= self.size || seen[a] {
                return false;
            }
            seen[a] = true;
            for &b in &sequence[p + 1..] {
                if b < self.size && self.below[b][a] {
                    return false;
                }
            }
        }
        true
    }

    /// Linear extensions in lexicographic order.
    pub fn linear_extensions(&self) -> LinearExtensions<'_> {
        LinearExtensions::new(self)
    }

    /// The lexicographically smallest linear extension.
    pub fn canonical_extension(&self) -> Vec<usize> {
        let mut placed = vec![false; self.size];
        let mut out = Vec::with_capacity(self.size);
        for _ in 0..self.size {
            let next = (0..self.size)
                .find(|&c| !placed[c] && (0..self.size).all(|p| placed[p] || !self.below[p][c]))
                .expect("closure is acyclic");
            placed[next] = true;
            out.push(next);
        }
        out
    }
}

/// Depth-first enumeration of linear extensions, smallest available
/// element first, so the output is lexicographically sorted.
pub struct LinearExtensions<'a> {
    order: &'a PartialOrderDag,
    prefix: Vec<usize>,
    placed: Vec<bool>,
    // next candidate to try at each depth
    cursor: Vec<usize>,
    done: bool,
}

impl<'a> LinearExtensions<'a> {
    fn new(order: &'a PartialOrderDag) -> Self {
        LinearExtensions {
            order,
            prefix: Vec::new(),
            placed: vec![false; order.size],
            cursor: vec![0],
            done: false,
        }
    }

    fn available(&self, c: usize) -> bool {
        !self.placed[c] && (0..self.order.size).all(|p| self.placed[p] || !self.order.below[p][c])
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let n = self.order.size;
        if self.done {
            return None;
        }
        if n == 0 {
            self.done = true;
            return Some(Vec::new());
        }
        loop {
            let depth = self.prefix.len();
            if depth == n {
                let out = self.prefix.clone();
                // backtrack one step so the next call resumes the search
                let last = self.prefix.pop().unwrap();
                self.placed[last] = false;
                self.cursor.pop();
                return Some(out);
            }
            let start = self.cursor[depth];
            match (start..n).find(|&c| self.available(c)) {
                Some(c) => {
                    self.cursor[depth] = c + 1;
                    self.prefix.push(c);
                    self.placed[c] = true;
                    self.cursor.push(0);
                }
                None => {
                    if depth == 0 {
                        self.done = true;
                        return None;
                    }
                    self.cursor.pop();
                    let last = self.prefix.pop().unwrap();
                    self.placed[last] = false;
                }
            }
        }
    }
}

/// The order generated by `Lⁱ < Lʲ` when `Lⁱ` sits strictly lower and the
/// open x-projections meet.
pub fn partial_order(config: &CubeConfig) -> Result<PartialOrderDag, CubeError> {
    if config.dim() != 2 {
        return Err(CubeError::DimensionMismatch {
            expected: 2,
            found: config.dim(),
        });
    }
    let report = config.validate_as(Mode::Disjoint);
    if !report.is_ok() {
        return Err(CubeError::Invalid(report));
    }
    let heights = heights_t(config)?;
    let k = config.arity();
    let mut generators = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if heights[i] < heights[j]
                && config.cube(i).factor(0).open_images_meet(config.cube(j).factor(0))
            {
                generators.push((i, j));
            }
        }
    }
    Ok(PartialOrderDag::from_generators(k, &generators)
        .expect("heights strictly increase along generating pairs"))
}

/// The order whose linear extensions are the ordering permutations in the
/// requested direction.
pub fn ordering_order(config: &CubeConfig, direction: Direction) -> Result<PartialOrderDag, CubeError> {
    let order = partial_order(config)?;
    Ok(match direction {
        Direction::Standard => order,
        Direction::Reverse => order.reversed(),
    })
}

/// Every ordering permutation `σ`, listed as `[σ(1), .., σ(k)]`.
pub fn ordering_permutations(
    config: &CubeConfig,
    direction: Direction,
) -> Result<Vec<Vec<usize>>, CubeError> {
    Ok(ordering_order(config, direction)?.linear_extensions().collect())
}

pub fn canonical_ordering(config: &CubeConfig, direction: Direction) -> Result<Vec<usize>, CubeError> {
    Ok(ordering_order(config, direction)?.canonical_extension())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubes::LittleCube;
    use crate::perm::Perm;
    use crate::rational::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn boxes(rows: &[((i64, i64), (i64, i64), (i64, i64), (i64, i64))]) -> CubeConfig {
        let cubes = rows
            .iter()
            .map(|&(x0, x1, y0, y1)| {
                LittleCube::from_box(&[(r(x0.0, x0.1), r(x1.0, x1.1)), (r(y0.0, y0.1), r(y1.0, y1.1))])
                    .unwrap()
            })
            .collect();
        CubeConfig::new(2, Mode::Disjoint, cubes).unwrap()
    }

    // (1,2) and (2,3) overlap in x, (1,3) do not; heights increase
    fn staircase() -> CubeConfig {
        boxes(&[
            ((-1, 1), (-1, 5), (-1, 1), (-1, 2)),
            ((-2, 5), (2, 5), (-1, 2), (0, 1)),
            ((1, 5), (1, 1), (0, 1), (1, 1)),
        ])
    }

    fn brute_force(order: &PartialOrderDag) -> Vec<Vec<usize>> {
        Perm::all(order.size())
            .map(|p| p.images().to_vec())
            .filter(|seq| {
                // non-decreasing: no later element strictly below an earlier one
                (0..seq.len()).all(|a| (a + 1..seq.len()).all(|b| !order.precedes(seq[b], seq[a])))
            })
            .collect()
    }

    #[test]
    fn disjoint_projections_give_empty_order() {
        let c = boxes(&[
            ((-1, 1), (-1, 3), (-1, 1), (1, 1)),
            ((-1, 3), (1, 3), (0, 1), (1, 2)),
            ((1, 3), (1, 1), (-1, 2), (1, 1)),
        ]);
        let order = partial_order(&c).unwrap();
        assert!(order.edges().is_empty());
        assert_eq!(ordering_permutations(&c, Direction::Standard).unwrap().len(), 6);
    }

    #[test]
    fn stacked_pair_has_one_edge() {
        let c = boxes(&[((-1, 1), (1, 1), (0, 1), (1, 1)), ((-1, 1), (1, 1), (-1, 1), (0, 1))]);
        let order = partial_order(&c).unwrap();
        assert_eq!(order.edges(), vec![(1, 0)]);
        assert_eq!(ordering_permutations(&c, Direction::Standard).unwrap(), vec![vec![1, 0]]);
        assert_eq!(ordering_permutations(&c, Direction::Reverse).unwrap(), vec![vec![0, 1]]);
    }

    #[test]
    fn staircase_closure_and_count() {
        let c = staircase();
        let order = partial_order(&c).unwrap();
        assert!(order.precedes(0, 1));
        assert!(order.precedes(1, 2));
        assert!(order.precedes(0, 2));
        let exts = ordering_permutations(&c, Direction::Standard).unwrap();
        assert_eq!(exts, brute_force(&order));
        assert_eq!(exts, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn chain_has_unique_extension() {
        let c = boxes(&[
            ((-1, 1), (1, 1), (1, 3), (1, 1)),
            ((-1, 1), (1, 1), (-1, 3), (1, 3)),
            ((-1, 1), (1, 1), (-1, 1), (-1, 3)),
        ]);
        assert_eq!(ordering_permutations(&c, Direction::Standard).unwrap(), vec![vec![2, 1, 0]]);
        assert_eq!(canonical_ordering(&c, Direction::Reverse).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn extensions_match_brute_force_on_small_orders() {
        // all DAGs on 4 vertices generated by subsets of forward pairs
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let gens: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, &p)| p)
                .collect();
            let order = PartialOrderDag::from_generators(4, &gens).unwrap();
            let fast: Vec<_> = order.linear_extensions().collect();
            assert_eq!(fast, brute_force(&order));
            assert_eq!(fast[0], order.canonical_extension());
            assert!(fast.iter().all(|e| order.is_extension(e)));
        }
    }

    #[test]
    fn cycles_are_rejected() {
        assert!(PartialOrderDag::from_generators(2, &[(0, 1), (1, 0)]).is_none());
    }

    #[test]
    fn empty_configuration_has_one_empty_ordering() {
        let c = CubeConfig::empty(2, Mode::Disjoint);
        assert_eq!(ordering_permutations(&c, Direction::Standard).unwrap(), vec![Vec::<usize>::new()]);
    }
}
