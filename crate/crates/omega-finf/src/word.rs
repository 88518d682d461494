use std::fmt;
use std::str::FromStr;

use coeff_core::{Error, Key};
use itertools::Itertools;
use koszul_dual::WedgeTuple;

/// A word `[c_1 | … | c_r]` of reduced-coalgebra letters in `Ω(C)(s, t)`.
/// Letter `j` has colors `(s_j, t_j)` with `t_j = s_{j+1}`; the empty word
/// is the unit `1_s` with `s = t`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OmegaWord<K> {
    s: i64,
    t: i64,
    letters: Vec<K>,
}

impl<K: Key> OmegaWord<K> {
    pub fn unit(n: i64) -> Self {
        OmegaWord { s: n, t: n, letters: Vec::new() }
    }

    /// Builds a word, checking composability with the supplied colors.
    pub fn with_colors(letters: Vec<K>, colors: impl Fn(&K) -> (i64, i64)) -> Result<Self, Error> {
        let Some(first) = letters.first() else {
            return Err(Error::input("word", "empty word needs OmegaWord::unit"));
        };
        let s = colors(first).0;
        let mut t = s;
        for (j, c) in letters.iter().enumerate() {
            let (a, b) = colors(c);
            if a != t {
                return Err(Error::input(format!("word/{j}"), format!("letter {c} does not compose")));
            }
            t = b;
        }
        Ok(OmegaWord { s, t, letters })
    }

    /// Colors `(s, t)`.
    pub fn colors(&self) -> (i64, i64) {
        (self.s, self.t)
    }

    pub fn letters(&self) -> &[K] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self · other`, defined when `self` ends where `other` starts.
    pub fn concat(&self, other: &OmegaWord<K>) -> Option<OmegaWord<K>> {
        (self.t == other.s).then(|| OmegaWord {
            s: self.s,
            t: other.t,
            letters: self.letters.iter().chain(&other.letters).cloned().collect(),
        })
    }

    /// Replaces letter `i` by the two-letter block `a, b`; colors are kept.
    pub fn splice(&self, i: usize, a: &K, b: &K) -> OmegaWord<K> {
        let mut letters = Vec::with_capacity(self.letters.len() + 1);
        letters.extend_from_slice(&self.letters[..i]);
        letters.push(a.clone());
        letters.push(b.clone());
        letters.extend_from_slice(&self.letters[i + 1..]);
        OmegaWord { s: self.s, t: self.t, letters }
    }
}

impl OmegaWord<WedgeTuple> {
    /// A word in `F∞`; letters must be proper wedge tuples.
    pub fn from_wedges(letters: Vec<WedgeTuple>) -> Result<Self, Error> {
        if let Some(j) = letters.iter().position(WedgeTuple::is_unit) {
            return Err(Error::input(format!("word/{j}"), "units are not letters of Ω"));
        }
        Self::with_colors(letters, WedgeTuple::colors)
    }

    /// The generator `∂^n_I` as a one-letter word.
    pub fn generator(w: WedgeTuple) -> Self {
        Self::from_wedges(vec![w]).expect("a proper wedge is a valid word")
    }

    /// Sum of `k_j - 1` over the letters.
    pub fn degree(&self) -> i64 {
        self.letters.iter().map(|w| w.k() as i64 - 1).sum()
    }
}

impl<K: fmt::Display> fmt::Display for OmegaWord<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            write!(f, "1[{}]", self.t)
        } else {
            write!(f, "{}", self.letters.iter().join("*"))
        }
    }
}

impl FromStr for OmegaWord<WedgeTuple> {
    type Err = Error;

    /// Parses `d[n](..)*d[n'](..)*…` or `1[n]`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("1[") {
            let n = rest
                .strip_suffix(']')
                .and_then(|x| x.trim().parse::<i64>().ok())
                .filter(|n| *n >= 0)
                .ok_or_else(|| Error::input("word", format!("bad unit {s:?}")))?;
            return Ok(Self::unit(n));
        }
        let letters = s.split('*').map(str::parse).collect::<Result<Vec<WedgeTuple>, _>>()?;
        Self::from_wedges(letters)
    }
}
