/// Root datum of type `A_rank`, i.e. of `sl(rank + 1)`.
///
/// Indices are 1-based throughout: simple roots `α_1..α_rank`, positive roots
/// `α_(i,j) = α_i + ... + α_(j-1)` for `1 <= i < j <= rank + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RootDatum {
    rank: usize,
}

impl RootDatum {
    pub fn a(rank: usize) -> Self {
        assert!(rank >= 1, "rank must be positive");
        RootDatum { rank }
    }

    /// `A_2N`, the root system of `gl(2N+1)`.
    pub fn esoteric(n_half: usize) -> Self {
        Self::a(2 * n_half)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the fundamental module.
    pub fn n(&self) -> usize {
        self.rank + 1
    }

    pub fn cartan_entry(&self, i: usize, j: usize) -> i32 {
        if i == j {
            2
        } else if i.abs_diff(j) == 1 {
            -1
        } else {
            0
        }
    }

    pub fn cartan(&self) -> Vec<Vec<i32>> {
        (1..=self.rank)
            .map(|i| (1..=self.rank).map(|j| self.cartan_entry(i, j)).collect())
            .collect()
    }

    /// Positive roots in lexicographic `(i, j)` order.
    pub fn positive_roots(&self) -> Vec<(usize, usize)> {
        (1..=self.rank)
            .flat_map(|i| ((i + 1)..=self.n()).map(move |j| (i, j)))
            .collect()
    }

    /// `i' = n + 1 - i` on basis indices.
    pub fn prime_index(&self, i: usize) -> usize {
        self.n() + 1 - i
    }

    /// `α'_j = α_(n - j)` on simple roots.
    pub fn prime_simple(&self, j: usize) -> usize {
        self.n() - j
    }
}

pub fn height(root: (usize, usize)) -> usize {
    root.1 - root.0
}
