use std::fmt;

/// Fixed-width bit set over automaton states.
///
/// The width (number of addressable states) is fixed at construction. Sets of
/// different widths never compare equal and must not be combined.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateSet {
    width: usize,
    blocks: Vec<u64>,
}

impl StateSet {
    pub fn empty(width: usize) -> Self {
        StateSet {
            width,
            blocks: vec![0; width.div_ceil(64)],
        }
    }

    pub fn singleton(width: usize, state: usize) -> Self {
        let mut set = Self::empty(width);
        set.insert(state);
        set
    }

    pub fn from_states<I>(width: usize, states: I) -> Self
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(width);
        for state in states {
            set.insert(state);
        }
        set
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn insert(&mut self, state: usize) {
        assert!(
            state < self.width,
            "state {state} out of range for width {}",
            self.width
        );
        self.blocks[state / 64] |= 1u64 << (state % 64);
    }

    pub fn contains(&self, state: usize) -> bool {
        state < self.width && (self.blocks[state / 64] >> (state % 64)) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &StateSet) {
        assert_eq!(self.width, other.width, "set width mismatch");
        for (block, o) in self.blocks.iter_mut().zip(&other.blocks) {
            *block |= o;
        }
    }

    pub fn intersects(&self, other: &StateSet) -> bool {
        assert_eq!(self.width, other.width, "set width mismatch");
        self.blocks.iter().zip(&other.blocks).any(|(a, b)| a & b != 0)
    }

    /// Copies the set into a space of `width` states, adding `offset` to every
    /// member.
    pub fn embed(&self, width: usize, offset: usize) -> StateSet {
        let mut out = StateSet::empty(width);
        for state in self.iter() {
            out.insert(state + offset);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(i, &block)| BitIter { block, base: i * 64 })
    }
}

struct BitIter {
    block: u64,
    base: usize,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.block == 0 {
            return None;
        }
        let low = self.block.trailing_zeros() as usize;
        self.block &= self.block - 1;
        Some(self.base + low)
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
