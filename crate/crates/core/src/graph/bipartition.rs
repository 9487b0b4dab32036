/// Vertex subset `A` of `{0, .., n-1}`, stored as a bitset.
///
/// Emptiness and fullness are allowed here; operations that need a proper
/// bipartition check it themselves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    n: usize,
    words: Vec<u64>,
}

impl Bipartition {
    pub fn empty(n: usize) -> Self {
        Bipartition {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Self {
        let mut out = Self::empty(n);
        for v in members {
            out.insert(v);
        }
        out
    }

    /// Members are the vertices whose flag is set.
    pub fn from_flags(flags: &[bool]) -> Self {
        Self::from_members(
            flags.len(),
            flags.iter().enumerate().filter(|(_, &f)| f).map(|(v, _)| v),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside 0..{}", self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Neither empty nor the whole vertex set.
    pub fn is_proper(&self) -> bool {
        let size = self.len();
        size > 0 && size < self.n
    }

    pub fn complement(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        if !self.n.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (self.n % 64)) - 1;
            }
        }
        Bipartition { n: self.n, words }
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.contains(v)).collect()
    }

    pub fn non_members(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| !self.contains(v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_masks_tail() {
        let a = Bipartition::from_members(70, [0, 65]);
        let c = a.complement();
        assert_eq!(c.len(), 68);
        assert!(!c.contains(65) && c.contains(69) && !c.contains(70));
        assert_eq!(c.complement(), a);
    }

    #[test]
    fn properness() {
        assert!(!Bipartition::empty(3).is_proper());
        assert!(!Bipartition::from_members(2, [0, 1]).is_proper());
        assert!(Bipartition::from_members(2, [1]).is_proper());
    }
}
