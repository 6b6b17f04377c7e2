use std::fmt;

/// Subset of the generator alphabet, packed into 16 bits.
/// Bit i corresponds to the generator at index i in declaration order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mask(pub u16);

pub const MAX_GENERATORS: usize = 16;

impl Mask {
    pub const EMPTY: Mask = Mask(0);

    pub fn full(arity: usize) -> Mask {
        debug_assert!(arity <= MAX_GENERATORS);
        if arity == 16 {
            Mask(u16::MAX)
        } else {
            Mask((1u16 << arity) - 1)
        }
    }

    pub fn single(i: usize) -> Mask {
        Mask(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn subset_of(self, other: Mask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn proper_subset_of(self, other: Mask) -> bool {
        self != other && self.subset_of(other)
    }

    pub fn inter(self, other: Mask) -> Mask {
        Mask(self.0 & other.0)
    }

    pub fn union(self, other: Mask) -> Mask {
        Mask(self.0 | other.0)
    }

    pub fn without(self, i: usize) -> Mask {
        Mask(self.0 & !(1 << i))
    }

    pub fn with(self, i: usize) -> Mask {
        Mask(self.0 | (1 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Indices of set bits, ascending.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..MAX_GENERATORS).filter(move |&i| self.contains(i))
    }

    /// All subsets of the full mask over `arity` generators, ascending as integers.
    pub fn all(arity: usize) -> impl Iterator<Item = Mask> {
        (0..=Mask::full(arity).0).map(Mask)
    }

    /// All subsets of `self`, ascending as integers.
    pub fn subsets(self) -> impl Iterator<Item = Mask> {
        // enumerate submasks of self.0 by counting through the full range
        // and keeping those inside; arity is tiny so this is fine
        let m = self.0;
        (0..=m).map(Mask).filter(move |s| s.0 & !m == 0)
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mask({:#06b})", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_lattice() {
        let e = Mask::full(3);
        assert_eq!(e.0, 0b111);
        assert!(Mask(0b101).subset_of(e));
        assert!(!e.subset_of(Mask(0b101)));
        assert!(Mask(0b001).proper_subset_of(Mask(0b011)));
        assert!(!Mask(0b011).proper_subset_of(Mask(0b011)));
        assert_eq!(Mask(0b110).inter(Mask(0b011)), Mask(0b010));
        assert_eq!(Mask::all(2).count(), 4);
        assert_eq!(Mask(0b101).subsets().count(), 4);
        assert_eq!(Mask(0b101).iter().collect::<Vec<_>>(), vec![0, 2]);
    }
}
