//! Bit-mask subsets of a context's points and parameters.
//!
//! Contexts hold at most 64 points and 64 parameters, so every subset fits
//! in one `u64`. Bit `i` stands for the `i`-th label in canonical order.

use std::fmt;

/// Largest number of points or parameters a context may hold.
pub const MAX_LABELS: usize = 64;

macro_rules! mask_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(pub u64);

        impl $name {
            pub const EMPTY: $name = $name(0);

            /// The set `{0, 1, ..., n - 1}`.
            pub fn full(n: usize) -> Self {
                if n >= 64 {
                    $name(u64::MAX)
                } else {
                    $name((1u64 << n) - 1)
                }
            }

            pub fn singleton(i: usize) -> Self {
                $name(1u64 << i)
            }

            pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
                $name(it.into_iter().fold(0u64, |acc, i| acc | (1u64 << i)))
            }

            pub fn bits(self) -> u64 {
                self.0
            }

            pub fn contains(self, i: usize) -> bool {
                i < 64 && self.0 & (1u64 << i) != 0
            }

            pub fn insert(&mut self, i: usize) {
                self.0 |= 1u64 << i;
            }

            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            pub fn union(self, other: Self) -> Self {
                $name(self.0 | other.0)
            }

            pub fn intersection(self, other: Self) -> Self {
                $name(self.0 & other.0)
            }

            pub fn difference(self, other: Self) -> Self {
                $name(self.0 & !other.0)
            }

            pub fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            /// Indices of the members, ascending.
            pub fn iter(self) -> impl Iterator<Item = usize> {
                let mut rest = self.0;
                std::iter::from_fn(move || {
                    if rest == 0 {
                        None
                    } else {
                        let i = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        Some(i)
                    }
                })
            }

            /// Every subset of `self`, in increasing numeric order of the mask.
            pub fn subsets(self) -> impl Iterator<Item = Self> {
                let full = self.0;
                let mut next = Some(0u64);
                std::iter::from_fn(move || {
                    let cur = next?;
                    next = if cur == full {
                        None
                    } else {
                        Some((cur.wrapping_sub(full)) & full)
                    };
                    Some($name(cur))
                })
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }
    };
}

mask_type!(
    /// A subset of the universe.
    PointSet
);
mask_type!(
    /// A subset of the parameter set.
    ParamSet
);
