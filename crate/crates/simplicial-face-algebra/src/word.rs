use std::fmt;

use coeff_core::Error;
use itertools::Itertools;

/// A composable word `∂_{i_1}^{n_1} ⋯ ∂_{i_r}^{n_r}` read left to right,
/// with `n_{j+1} = n_j + 1` and `0 <= i_j <= n_j`. It lies in
/// `F(n - r, n)_0` where `n` is the ambient of the last letter; the empty
/// word is the unit `1_n` and keeps `n` explicitly.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceWord {
    n: i64,
    letters: Vec<i64>,
}

impl FaceWord {
    pub fn unit(n: i64) -> Self {
        FaceWord { n, letters: Vec::new() }
    }

    /// Builds a word from `(i, n)` letters, checking composability.
    pub fn new(letters: &[(i64, i64)]) -> Result<Self, Error> {
        let Some(&(_, top)) = letters.last() else {
            return Err(Error::input("letters", "use FaceWord::unit for the empty word"));
        };
        let r = letters.len() as i64;
        for (j, &(i, n)) in letters.iter().enumerate() {
            if n != top - (r - 1 - j as i64) {
                return Err(Error::input(format!("letters/{j}"), "ambient indices must increase by one"));
            }
            if i < 0 || i > n || n < 1 {
                return Err(Error::input(format!("letters/{j}"), format!("index {i} out of range for ambient {n}")));
            }
        }
        Ok(FaceWord { n: top, letters: letters.iter().map(|l| l.0).collect() })
    }

    /// Word from indices alone, the last letter having ambient `n`.
    pub fn from_indices(n: i64, indices: &[i64]) -> Result<Self, Error> {
        let r = indices.len() as i64;
        let letters: Vec<(i64, i64)> = indices.iter().enumerate().map(|(j, &i)| (i, n - (r - 1 - j as i64))).collect();
        if letters.is_empty() {
            Ok(Self::unit(n))
        } else {
            Self::new(&letters)
        }
    }

    /// Colors `(n - r, n)`.
    pub fn colors(&self) -> (i64, i64) {
        (self.n - self.letters.len() as i64, self.n)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn indices(&self) -> &[i64] {
        &self.letters
    }

    /// `(i, n)` letters, left to right.
    pub fn letters(&self) -> Vec<(i64, i64)> {
        let (s, _) = self.colors();
        self.letters.iter().enumerate().map(|(j, &i)| (i, s + 1 + j as i64)).collect()
    }

    /// `self · other` when `other` ends where `self` starts.
    pub fn concat(&self, other: &FaceWord) -> Option<FaceWord> {
        if other.colors().0 != self.n {
            return None;
        }
        Some(FaceWord { n: other.n, letters: self.letters.iter().chain(&other.letters).copied().collect() })
    }

    pub fn is_normal(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for FaceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1[{}]", self.n);
        }
        write!(f, "{}", self.letters().iter().map(|(i, n)| format!("d{i}^{n}")).join("*"))
    }
}

/// Every word reachable by one rewrite `∂_i ∂_j → ∂_{j-1} ∂_i` (`i < j`)
/// at some adjacent position.
pub fn rewrite_steps(w: &FaceWord) -> Vec<FaceWord> {
    let mut out = Vec::new();
    for p in 0..w.letters.len().saturating_sub(1) {
        let (i, j) = (w.letters[p], w.letters[p + 1]);
        if i < j {
            let mut v = w.clone();
            v.letters[p] = j - 1;
            v.letters[p + 1] = i;
            out.push(v);
        }
    }
    out
}

/// The normal form: adjacent indices non-increasing. The relation carries
/// no sign, so the coefficient is always +1.
pub fn normalize_word(w: &FaceWord) -> FaceWord {
    let mut v = w.clone();
    // Bubble pass: each swap lowers the number of ascending pairs weighted by
    // position, so the loop terminates.
    loop {
        let mut changed = false;
        for p in 0..v.letters.len().saturating_sub(1) {
            let (i, j) = (v.letters[p], v.letters[p + 1]);
            if i < j {
                v.letters[p] = j - 1;
                v.letters[p + 1] = i;
                changed = true;
            }
        }
        if !changed {
            return v;
        }
    }
}

/// Normal words of length `k` from `X_n` to `X_{n-k}`, in lexicographic order.
pub fn normal_words(k: usize, n: i64) -> Vec<FaceWord> {
    fn rec(pos: usize, k: usize, n: i64, prev: i64, acc: &mut Vec<i64>, out: &mut Vec<FaceWord>) {
        if pos == k {
            out.push(FaceWord { n, letters: acc.clone() });
            return;
        }
        let amb = n - (k - 1 - pos) as i64;
        for i in 0..=amb.min(prev) {
            acc.push(i);
            rec(pos + 1, k, n, i, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if k as i64 <= n {
        rec(0, k, n, i64::MAX, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let w = FaceWord::new(&[(0, 2), (1, 3)]).unwrap();
        assert_eq!(normalize_word(&w), FaceWord::new(&[(0, 2), (0, 3)]).unwrap());
        let w = FaceWord::new(&[(2, 2), (1, 3)]).unwrap();
        assert_eq!(normalize_word(&w), w);
        assert_eq!(normal_words(2, 3).len(), 6);
        assert!(FaceWord::new(&[(0, 2), (0, 2)]).is_err());
        assert!(FaceWord::new(&[(3, 2)]).is_err());
        assert_eq!(w.to_string(), "d2^2*d1^3");
        assert_eq!(w.colors(), (1, 3));
    }
}
