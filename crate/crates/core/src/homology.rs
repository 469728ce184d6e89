//! Homology over GF(2): bit-packed boundary matrices, rank by Gaussian
//! elimination, reduced Betti numbers with a dimension cap, and the
//! homological-equality oracle used throughout the tests.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Default cap on the top homological dimension reported.
pub const DEFAULT_MAX_DIM: usize = 4;

/// A matrix over GF(2) with rows packed into u64 words.
#[derive(Debug, Clone)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: Vec<Vec<u64>>,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let w = cols.div_ceil(64);
        BitMatrix { rows, cols, words: vec![vec![0u64; w]; rows] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize) {
        self.words[r][c / 64] |= 1 << (c % 64);
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.words[r][c / 64] >> (c % 64) & 1 == 1
    }

    /// Rank by row reduction.
    pub fn rank(&self) -> usize {
        let mut rows = self.words.clone();
        let mut rank = 0;
        for c in 0..self.cols {
            let word = c / 64;
            let bit = 1u64 << (c % 64);
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][word] & bit != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let p = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[word] & bit != 0 {
                    for (x, y) in row.iter_mut().zip(&p) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Matrix product over GF(2).
    pub fn multiply(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = BitMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    for (x, y) in out.words[r].iter_mut().zip(&other.words[c]) {
                        *x ^= y;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|r| r.iter().all(|&w| w == 0))
    }
}

/// A chain complex over GF(2): boundary matrices d[i] mapping i-chains to
/// (i-1)-chains (rows indexed by (i-1)-simplices, columns by i-simplices).
/// d[0] is the augmentation onto the single (-1)-simplex.
#[derive(Debug, Clone)]
pub struct ChainComplexGF2 {
    /// dims[i] = number of i-simplices, for i = 0..=top.
    pub dims: Vec<usize>,
    /// boundaries[i]: dims[i-1] x dims[i] for i >= 1; boundaries[0] is
    /// 1 x dims[0] (augmentation).
    pub boundaries: Vec<BitMatrix>,
}

impl ChainComplexGF2 {
    /// The reduced chain complex of a simplicial complex, truncated above
    /// `max_dim` (boundaries up to max_dim + 1 are kept so that Betti
    /// numbers through max_dim are exact).
    pub fn of_complex(k: &SimplicialComplex, max_dim: usize) -> Self {
        let top = match k.dimension() {
            None => return ChainComplexGF2 { dims: Vec::new(), boundaries: Vec::new() },
            Some(d) => d.min(max_dim + 1),
        };
        let mut basis: Vec<Vec<Vec<usize>>> = Vec::new();
        for i in 0..=top {
            basis.push(k.simplices_of_dim(i));
        }
        let mut boundaries = Vec::new();
        // augmentation
        let mut aug = BitMatrix::zero(1, basis[0].len());
        for c in 0..basis[0].len() {
            aug.set(0, c);
        }
        boundaries.push(aug);
        for i in 1..=top {
            let index_of = |s: &Vec<usize>| basis[i - 1].binary_search(s).unwrap();
            let mut m = BitMatrix::zero(basis[i - 1].len(), basis[i].len());
            for (c, s) in basis[i].iter().enumerate() {
                for skip in 0..s.len() {
                    let face: Vec<usize> =
                        s.iter().enumerate().filter(|(j, _)| *j != skip).map(|(_, &v)| v).collect();
                    m.set(index_of(&face), c);
                }
            }
            boundaries.push(m);
        }
        ChainComplexGF2 { dims: basis.iter().map(|b| b.len()).collect(), boundaries }
    }

    /// Checks d(i) . d(i+1) = 0 for all consecutive boundaries.
    pub fn verify_boundary_squares_to_zero(&self) -> bool {
        self.boundaries
            .windows(2)
            .all(|w| w[0].multiply(&w[1]).is_zero())
    }

    /// Reduced Betti numbers b~_0 .. b~_max_dim. The empty complex reports
    /// an empty vector.
    pub fn reduced_betti(&self, max_dim: usize) -> Vec<usize> {
        if self.dims.is_empty() {
            return Vec::new();
        }
        let top = self.dims.len() - 1;
        let rank = |i: usize| -> usize {
            if i < self.boundaries.len() {
                self.boundaries[i].rank()
            } else {
                0
            }
        };
        let mut out = Vec::new();
        for i in 0..=max_dim {
            if i > top {
                out.push(0);
                continue;
            }
            let kernel = self.dims[i] - rank(i);
            let image = rank(i + 1);
            out.push(kernel - image);
        }
        out
    }
}

/// Reduced Betti numbers of a simplicial complex over GF(2). The empty
/// complex yields an empty vector.
pub fn reduced_betti(k: &SimplicialComplex, max_dim: usize) -> Vec<usize> {
    let cc = ChainComplexGF2::of_complex(k, max_dim);
    cc.reduced_betti(max_dim)
}

/// True when both complexes have the same reduced Betti numbers up to the
/// cap. This is the working notion of "same homotopy type" in tests; it is
/// a necessary condition only.
pub fn homologically_equal(a: &SimplicialComplex, b: &SimplicialComplex, max_dim: usize) -> bool {
    reduced_betti(a, max_dim) == reduced_betti(b, max_dim)
}

/// Internal audit: rank-nullity per boundary and the Euler characteristic
/// recomputed two ways. Returns an error naming the failing check.
pub fn audit(k: &SimplicialComplex, max_dim: usize) -> Result<()> {
    let cc = ChainComplexGF2::of_complex(k, max_dim);
    if !cc.verify_boundary_squares_to_zero() {
        return Err(Error::Structural("boundary of boundary is nonzero".into()));
    }
    if cc.dims.is_empty() {
        return Ok(());
    }
    let top = k.dimension().unwrap();
    if top <= max_dim {
        // reduced Euler characteristic from face counts
        let mut chi: i64 = -1;
        for i in 0..=top {
            let n = k.simplices_of_dim(i).len() as i64;
            chi += if i % 2 == 0 { n } else { -n };
        }
        // and from Betti numbers
        let betti = cc.reduced_betti(top.max(max_dim));
        let mut chi_b: i64 = 0;
        for (i, &b) in betti.iter().enumerate() {
            chi_b += if i % 2 == 0 { b as i64 } else { -(b as i64) };
        }
        if chi != chi_b {
            return Err(Error::Structural(format!(
                "Euler characteristic mismatch: faces give {chi}, homology gives {chi_b}"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{barycentric_subdivision, boundary_simplex, full_simplex, SimplicialComplex};

    #[test]
    fn point_is_acyclic() {
        let pt = SimplicialComplex::from_maximal(&["x"], &[vec!["x"]]).unwrap();
        assert_eq!(reduced_betti(&pt, 2), vec![0, 0, 0]);
    }

    #[test]
    fn empty_complex_reports_empty() {
        assert!(reduced_betti(&SimplicialComplex::empty(), 3).is_empty());
    }

    #[test]
    fn spheres() {
        for n in 1..=4 {
            let s = boundary_simplex(n);
            let betti = reduced_betti(&s, 4);
            for (i, &b) in betti.iter().enumerate() {
                assert_eq!(b, usize::from(i == n - 1), "S^{} at dim {i}", n - 1);
            }
            audit(&s, 4).unwrap();
        }
    }

    #[test]
    fn two_points_have_betti0_one() {
        let k = SimplicialComplex::from_maximal(&["a", "b"], &[vec!["a"], vec!["b"]]).unwrap();
        assert_eq!(reduced_betti(&k, 1), vec![1, 0]);
    }

    #[test]
    fn full_simplices_are_acyclic() {
        for n in 0..=4 {
            assert!(reduced_betti(&full_simplex(n), 4).iter().all(|&b| b == 0));
        }
    }

    #[test]
    fn subdivision_preserves_homology() {
        let s = boundary_simplex(2);
        let (sd, _) = barycentric_subdivision(&s, None, 2).unwrap();
        assert!(homologically_equal(&s, &sd, 3));
        audit(&sd, 3).unwrap();
    }

    #[test]
    fn boundary_squares_to_zero() {
        let cc = ChainComplexGF2::of_complex(&boundary_simplex(3), 4);
        assert!(cc.verify_boundary_squares_to_zero());
    }

    #[test]
    fn torus_like_wedge() {
        // wedge of two circles: b~0 = 0, b~1 = 2
        let k = SimplicialComplex::from_maximal(
            &["a", "b", "c", "d", "e", "p"],
            &[
                vec!["p", "a"],
                vec!["a", "b"],
                vec!["b", "p"],
                vec!["p", "c"],
                vec!["c", "d"],
                vec!["d", "p"],
                vec!["e", "p"],
                vec!["e", "a"],
            ],
        )
        .unwrap();
        // two triangles sharing p plus a chord: circle count from homology
        let betti = reduced_betti(&k, 2);
        assert_eq!(betti[0], 0);
        assert_eq!(betti[1], 3);
    }
}
