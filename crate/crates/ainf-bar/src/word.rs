use std::fmt;

/// A bar word `[a_1|…|a_n]` of generator ids; the empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BarWord(pub Vec<String>);

impl BarWord {
    pub fn empty() -> Self {
        BarWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[String] {
        &self.0
    }

    /// `[a_1..a_i]` and `[a_{i+1}..a_n]`.
    pub fn split_at(&self, i: usize) -> (BarWord, BarWord) {
        (BarWord(self.0[..i].to_vec()), BarWord(self.0[i..].to_vec()))
    }

    /// Replaces `a_start..a_start+len` by `g`.
    pub fn replace(&self, start: usize, len: usize, g: &str) -> BarWord {
        let mut v = self.0[..start].to_vec();
        v.push(g.to_string());
        v.extend_from_slice(&self.0[start + len..]);
        BarWord(v)
    }
}

impl fmt::Display for BarWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join("|"))
    }
}

impl From<&[&str]> for BarWord {
    fn from(v: &[&str]) -> Self {
        BarWord(v.iter().map(|s| s.to_string()).collect())
    }
}
