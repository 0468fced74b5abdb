use num_traits::{One, Zero};

use super::matrix::ExponentMatrix;
use crate::error::{Error, Result};
use crate::exactalg::BigRat;
use crate::partitions::{p_stat, MultVector};

/// Enumeration cap: `8^6 = 262144` labelled trees.
pub const MAX_TREE_VERTICES: usize = 8;

/// Decode a Prüfer sequence over `{0, ..., n-1}` into the edges of its tree.
fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// All `n^{n-2}` labelled trees on `n >= 2` vertices, as edge lists.
pub fn prufer_trees(n: usize) -> impl Iterator<Item = Vec<(usize, usize)>> {
    assert!(n >= 2, "trees need at least two vertices");
    let len = n - 2;
    let count = n.pow(len as u32);
    (0..count).map(move |mut code| {
        let mut seq = vec![0; len];
        for slot in seq.iter_mut() {
            *slot = code % n;
            code /= n;
        }
        prufer_decode(&seq, n)
    })
}

/// `τ(m) = Σ_T Π_i m_i^{d_i - 1} Π_{(i,j) ∈ T} a_ij` over labelled spanning trees.
pub fn tau_tree(a: &ExponentMatrix, m: &[u32]) -> Result<BigRat> {
    let n = a.n();
    assert_eq!(m.len(), n, "exponent vector length");
    if n > MAX_TREE_VERTICES {
        return Err(Error::TooLarge(format!("tree enumeration on {n} vertices (limit {MAX_TREE_VERTICES})")));
    }
    if n == 1 {
        // the one-vertex tree has no edges, so the weight is m_1^{-1}
        if m[0] == 0 {
            return Err(Error::DivisionByZero);
        }
        return Ok(BigRat::new(1.into(), m[0].into()));
    }
    let mut total = BigRat::zero();
    for edges in prufer_trees(n) {
        let mut degree = vec![0u32; n];
        let mut w = BigRat::one();
        for &(i, j) in &edges {
            degree[i] += 1;
            degree[j] += 1;
            w *= a.get(i, j);
        }
        if w.is_zero() {
            continue;
        }
        for (i, d) in degree.iter().enumerate() {
            w *= BigRat::from_integer(m[i].into()).pow(*d as i32 - 1);
        }
        total += w;
    }
    Ok(total)
}

/// For `A = H_N`, `τ(m) = P_2(m)···P_{N-1}(m)` for every `m` drawn from `values^N`.
///
/// At `N = 1` the empty range is read as `1/P_1(m)`, so that
/// `Π_{i=2}^{N-1} P_i = Π_{i=1}^N P_i / (P_1 P_N)` for every `N >= 1`.
pub fn lemma_tau_check(n: usize, values: &[u32]) -> Result<bool> {
    if !(1..=6).contains(&n) {
        return Err(Error::invalid("lemma check runs for 1 <= N <= 6"));
    }
    if n == 1 {
        return values.iter().try_fold(true, |ok, &v| {
            let p1 = p_stat(1, &MultVector::new(vec![v]));
            Ok(ok && tau_tree(&ExponentMatrix::tadpole(1), &[v])? == BigRat::new(1.into(), p1.into()))
        });
    }
    let h = ExponentMatrix::tadpole(n);
    let mut m = vec![0usize; n];
    loop {
        let mv: Vec<u32> = m.iter().map(|&k| values[k]).collect();
        let mult = MultVector::new(mv.clone());
        let rhs: u64 = (2..n).map(|i| p_stat(i, &mult)).product();
        if tau_tree(&h, &mv)? != BigRat::from_integer(rhs.into()) {
            return Ok(false);
        }
        // odometer over values^n
        let mut k = 0;
        loop {
            if k == n {
                return Ok(true);
            }
            m[k] += 1;
            if m[k] < values.len() {
                break;
            }
            m[k] = 0;
            k += 1;
        }
    }
}
