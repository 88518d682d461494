use std::fmt;
use std::str::FromStr;

use coeff_core::{sign, Error, Scalar, Tensor, Vector};
use itertools::Itertools;

/// `[∂_{i_1}] ∧ … ∧ [∂_{i_k}] ∈ (F^!)(n-k, n)_k`; the empty tuple is the
/// counit-dual unit `1_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WedgeTuple {
    n: i64,
    idx: Vec<i64>,
}

impl WedgeTuple {
    /// Fails unless `0 <= i_1 < … < i_k <= n` and `k <= n`.
    pub fn new(n: i64, idx: Vec<i64>) -> Result<Self, Error> {
        if n < 0 {
            return Err(Error::input("n", "ambient must be nonnegative"));
        }
        if idx.len() as i64 > n {
            return Err(Error::input("tuple", format!("length {} exceeds ambient {n}", idx.len())));
        }
        if idx.first().is_some_and(|&i| i < 0) || idx.last().is_some_and(|&i| i > n) {
            return Err(Error::input("tuple", format!("indices must lie in 0..={n}")));
        }
        if !idx.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::input("tuple", "indices must be strictly increasing"));
        }
        Ok(WedgeTuple { n, idx })
    }

    pub fn unit(n: i64) -> Self {
        WedgeTuple { n, idx: Vec::new() }
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn indices(&self) -> &[i64] {
        &self.idx
    }

    pub fn k(&self) -> usize {
        self.idx.len()
    }

    pub fn is_unit(&self) -> bool {
        self.idx.is_empty()
    }

    /// Colors `(n - k, n)`.
    pub fn colors(&self) -> (i64, i64) {
        (self.n - self.k() as i64, self.n)
    }

    /// Sum of the indices.
    pub fn index_sum(&self) -> i64 {
        self.idx.iter().sum()
    }
}

impl fmt::Display for WedgeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d[{}]({})", self.n, self.idx.iter().join(","))
    }
}

impl FromStr for WedgeTuple {
    type Err = Error;

    /// Parses `d[n](i1,...,ik)`; `d[n]()` is the unit.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |m: &str| Error::input("wedge", format!("{m} in {s:?}"));
        let rest = s.trim().strip_prefix("d[").ok_or_else(|| bad("expected d["))?;
        let (n, rest) = rest.split_once(']').ok_or_else(|| bad("missing ]"))?;
        let n: i64 = n.trim().parse().map_err(|_| bad("bad ambient"))?;
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad("expected (indices)"))?;
        let idx = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(|t| t.trim().parse::<i64>()).collect::<Result<Vec<_>, _>>().map_err(|_| bad("bad index"))?
        };
        WedgeTuple::new(n, idx).map_err(|e| bad(&e.to_string()))
    }
}

/// Inversion count of a sequence.
pub fn inversions(seq: &[i64]) -> usize {
    seq.iter().tuple_combinations().filter(|(a, b)| a > b).count()
}

/// `σ̂(i_s) = σ(i_s) − α(σ(i_s))`, with `α` counting the smaller entries to
/// the right. `sigma[s]` is the position of `tuple` placed at slot `s`.
pub fn hat(sigma: &[usize], tuple: &[i64]) -> Vec<i64> {
    let p: Vec<i64> = sigma.iter().map(|&j| tuple[j]).collect();
    (0..p.len()).map(|s| p[s] - p[s + 1..].iter().filter(|&&x| x < p[s]).count() as i64).collect()
}

/// One term of the reduced coproduct: a shuffle `σ` of the tuple with
/// increasing blocks of sizes `m` and `k - m`, its sign, and the two hat
/// blocks as wedge tuples with ambients `n - (k - m)` and `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub sigma: Vec<usize>,
    pub m: usize,
    pub sign: i64,
    pub left: WedgeTuple,
    pub right: WedgeTuple,
}

fn make_split(w: &WedgeTuple, sigma: Vec<usize>, m: usize) -> Split {
    let k = w.k();
    let permuted: Vec<i64> = sigma.iter().map(|&j| w.idx[j]).collect();
    let h = hat(&sigma, &w.idx);
    let left = WedgeTuple::new(w.n - (k - m) as i64, h[..m].to_vec())
        .unwrap_or_else(|e| panic!("left hat block of {w} under {sigma:?} is invalid: {e}"));
    let right = WedgeTuple::new(w.n, h[m..].to_vec())
        .unwrap_or_else(|e| panic!("right hat block of {w} under {sigma:?} is invalid: {e}"));
    Split { sign: sign(inversions(&permuted) as i64 + 1), sigma, m, left, right }
}

/// All splits, ordered by `m` and then by the left block in lexicographic
/// order. Ordered `σ`-blocks are exactly the shuffles, so only those are
/// generated; the hat blocks are then increasing, which `WedgeTuple::new`
/// re-checks.
pub fn enumerate_splits(w: &WedgeTuple) -> Vec<Split> {
    let k = w.k();
    let mut out = Vec::new();
    for m in 1..k {
        for left in (0..k).combinations(m) {
            let right = (0..k).filter(|j| !left.contains(j));
            let sigma: Vec<usize> = left.iter().copied().chain(right).collect();
            out.push(make_split(w, sigma, m));
        }
    }
    out
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    (0..k).permutations(k).collect()
}

/// Reference enumeration over every `σ ∈ Σ_k` and `m`, keeping the
/// partitions whose hat blocks are increasing.
pub fn enumerate_splits_brute(w: &WedgeTuple) -> Vec<Split> {
    let k = w.k();
    let mut out = Vec::new();
    for m in 1..k {
        for sigma in permutations(k) {
            let h = hat(&sigma, &w.idx);
            let inc = |b: &[i64]| b.windows(2).all(|x| x[0] < x[1]);
            if inc(&h[..m]) && inc(&h[m..]) {
                out.push(make_split(w, sigma, m));
            }
        }
    }
    out
}

/// `∇w = 1_{n-k} ⊗ w + w ⊗ 1_n + Σ_splits sign · left ⊗ right`, and
/// `∇1_n = 1_n ⊗ 1_n`.
pub fn coproduct(w: &WedgeTuple) -> Vector<Tensor<WedgeTuple, WedgeTuple>> {
    let mut v = reduced_coproduct(w);
    let (s, t) = w.colors();
    v.add_term(Tensor(WedgeTuple::unit(s), w.clone()), Scalar::one());
    if !w.is_unit() {
        v.add_term(Tensor(w.clone(), WedgeTuple::unit(t)), Scalar::one());
    }
    v
}

/// The split part of the coproduct; zero on units and on `k = 1`.
pub fn reduced_coproduct(w: &WedgeTuple) -> Vector<Tensor<WedgeTuple, WedgeTuple>> {
    enumerate_splits(w).into_iter().map(|s| (Tensor(s.left, s.right), Scalar::from(s.sign))).collect()
}

/// Every wedge tuple with `1 <= k <= n <= n_max`, ordered by `n`, then `k`,
/// then lexicographically.
pub fn wedge_tuples(n_max: i64) -> Vec<WedgeTuple> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for k in 1..=n as usize {
            for idx in (0..=n).combinations(k) {
                out.push(WedgeTuple { n, idx });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: i64, idx: &[i64]) -> WedgeTuple {
        WedgeTuple::new(n, idx.to_vec()).unwrap()
    }

    #[test]
    fn hat_examples() {
        assert_eq!(hat(&[0, 1, 2], &[0, 2, 5]), vec![0, 2, 5]);
        assert_eq!(hat(&[1, 0], &[1, 3]), vec![2, 1]);
        assert_eq!(hat(&[2, 0, 1], &[0, 1, 2]), vec![0, 0, 1]);
    }

    #[test]
    fn k2_splits() {
        let s = enumerate_splits(&w(4, &[1, 3]));
        assert_eq!(s.len(), 2);
        assert_eq!((s[0].sign, &s[0].left, &s[0].right), (-1, &w(3, &[1]), &w(4, &[3])));
        assert_eq!((s[1].sign, &s[1].left, &s[1].right), (1, &w(3, &[2]), &w(4, &[1])));
        assert!(enumerate_splits(&w(2, &[1])).is_empty());
    }

    #[test]
    fn k3_splits_match_printed_signs() {
        let (a, b, c) = (1, 3, 5);
        let got: Vec<(i64, WedgeTuple, WedgeTuple)> =
            enumerate_splits(&w(6, &[a, b, c])).into_iter().map(|s| (s.sign, s.left, s.right)).collect();
        let mut expect = vec![
            (-1, w(4, &[a]), w(6, &[b, c])),
            (-1, w(5, &[a, b]), w(6, &[c])),
            (-1, w(4, &[c - 2]), w(6, &[a, b])),
            (-1, w(5, &[b - 1, c - 1]), w(6, &[a])),
            (1, w(4, &[b - 1]), w(6, &[a, c])),
            (1, w(5, &[a, c - 1]), w(6, &[b])),
        ];
        let mut got_sorted = got.clone();
        got_sorted.sort();
        expect.sort();
        assert_eq!(got_sorted, expect);
    }

    #[test]
    fn text_form() {
        let x = w(4, &[0, 2]);
        assert_eq!(x.to_string(), "d[4](0,2)");
        assert_eq!("d[4](0, 2)".parse::<WedgeTuple>().unwrap(), x);
        assert_eq!("d[3]()".parse::<WedgeTuple>().unwrap(), WedgeTuple::unit(3));
        for bad in ["d[2](2,1)", "d[1](0,1)", "d[2](3)", "x", "d[2](a)", "d[-1]()"] {
            assert!(bad.parse::<WedgeTuple>().is_err(), "{bad}");
        }
    }

    #[test]
    fn primitive_coproducts() {
        let x = w(3, &[1]);
        let expect = Vector::from_terms([
            (Tensor(WedgeTuple::unit(2), x.clone()), Scalar::one()),
            (Tensor(x.clone(), WedgeTuple::unit(3)), Scalar::one()),
        ]);
        assert_eq!(coproduct(&x), expect);
        assert_eq!(coproduct(&WedgeTuple::unit(2)), Vector::basis(Tensor(WedgeTuple::unit(2), WedgeTuple::unit(2))));
    }
}
