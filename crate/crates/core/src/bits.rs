use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Sub};

/// A code length in bits.
#[derive(Debug, Clone, Copy, Default, PartialEq, PartialOrd)]
pub struct Bits(pub f64);

impl Bits {
    pub const ZERO: Bits = Bits(0.0);

    pub fn value(self) -> f64 {
        self.0
    }

    /// `-log2(p)`.
    pub fn from_probability(p: f64) -> Bits {
        Bits(-p.log2())
    }
}

impl Add for Bits {
    type Output = Bits;
    fn add(self, rhs: Bits) -> Bits {
        Bits(self.0 + rhs.0)
    }
}

impl AddAssign for Bits {
    fn add_assign(&mut self, rhs: Bits) {
        self.0 += rhs.0;
    }
}

impl Sub for Bits {
    type Output = Bits;
    fn sub(self, rhs: Bits) -> Bits {
        Bits(self.0 - rhs.0)
    }
}

impl Sum for Bits {
    fn sum<I: Iterator<Item = Bits>>(iter: I) -> Bits {
        iter.fold(Bits::ZERO, Add::add)
    }
}

impl<'a> Sum<&'a Bits> for Bits {
    fn sum<I: Iterator<Item = &'a Bits>>(iter: I) -> Bits {
        iter.copied().sum()
    }
}

impl fmt::Display for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let precision = f.precision().unwrap_or(3);
        write!(f, "{:.*}", precision, self.0)
    }
}

/// Itemised code length.
#[derive(Debug, Clone, PartialEq)]
pub struct CodeReport {
    pub model: String,
    pub items: Vec<(String, Bits)>,
    pub total: Bits,
}

impl CodeReport {
    pub fn new(model: impl Into<String>, items: Vec<(String, Bits)>) -> Self {
        let total = items.iter().map(|(_, b)| *b).sum();
        CodeReport {
            model: model.into(),
            items,
            total,
        }
    }
}
