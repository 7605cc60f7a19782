use core::cmp::Ordering;
use core::fmt;
use core::ops::Add;

/// A grading of `Q[x, y]` with `deg x = w1` and `deg y = w2`, both positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    w1: u64,
    w2: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightError;

impl fmt::Display for WeightError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("weights must be positive integers")
    }
}

#[cfg(feature = "std")]
impl std::error::Error for WeightError {}

impl Weight {
    /// The standard grading, under which weighted degree is total degree.
    pub const STANDARD: Weight = Weight { w1: 1, w2: 1 };

    pub fn new(w1: u64, w2: u64) -> Result<Self, WeightError> {
        if w1 == 0 || w2 == 0 {
            return Err(WeightError);
        }
        Ok(Weight { w1, w2 })
    }

    pub fn w1(self) -> u64 {
        self.w1
    }

    pub fn w2(self) -> u64 {
        self.w2
    }

    /// `max(w1, w2)`.
    pub fn max(self) -> u64 {
        self.w1.max(self.w2)
    }

    /// `min(w1, w2)`.
    pub fn min(self) -> u64 {
        self.w1.min(self.w2)
    }

    pub fn swapped(self) -> Self {
        Weight {
            w1: self.w2,
            w2: self.w1,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.w1, self.w2)
    }
}

/// A (weighted) degree. The zero polynomial has degree `MinusInfinity`,
/// which sorts below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WDeg {
    MinusInfinity,
    Finite(u64),
}

impl WDeg {
    pub fn finite(self) -> Option<u64> {
        match self {
            WDeg::Finite(d) => Some(d),
            WDeg::MinusInfinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, WDeg::Finite(_))
    }
}

impl From<u64> for WDeg {
    fn from(d: u64) -> Self {
        WDeg::Finite(d)
    }
}

impl PartialOrd for WDeg {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WDeg {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (WDeg::MinusInfinity, WDeg::MinusInfinity) => Ordering::Equal,
            (WDeg::MinusInfinity, _) => Ordering::Less,
            (_, WDeg::MinusInfinity) => Ordering::Greater,
            (WDeg::Finite(a), WDeg::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for WDeg {
    type Output = WDeg;

    fn add(self, rhs: WDeg) -> WDeg {
        match (self, rhs) {
            (WDeg::Finite(a), WDeg::Finite(b)) => WDeg::Finite(a + b),
            _ => WDeg::MinusInfinity,
        }
    }
}

impl fmt::Display for WDeg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WDeg::MinusInfinity => f.write_str("-inf"),
            WDeg::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_rejects_zero() {
        assert_eq!(Weight::new(0, 3), Err(WeightError));
        assert_eq!(Weight::new(2, 0), Err(WeightError));
        let w = Weight::new(2, 3).unwrap();
        assert_eq!((w.max(), w.min()), (3, 2));
        assert_eq!(w.swapped(), Weight::new(3, 2).unwrap());
    }

    #[test]
    fn minus_infinity_is_bottom() {
        assert!(WDeg::MinusInfinity < WDeg::Finite(0));
        assert_eq!(WDeg::MinusInfinity.max(WDeg::Finite(4)), WDeg::Finite(4));
        assert_eq!(WDeg::Finite(2) + WDeg::MinusInfinity, WDeg::MinusInfinity);
    }
}
