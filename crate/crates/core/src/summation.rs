//! Compensated (Neumaier) summation for long oscillating series.
//!
//! Zero sums accumulate thousands of unit-magnitude terms of nearly
//! cancelling phase; plain `f64` addition loses digits there.

use num_complex::Complex64;

/// Neumaier variant of Kahan summation.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
    s: f64,
    c: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.s + x;
        if self.s.abs() >= x.abs() {
            self.c += (self.s - t) + x;
        } else {
            self.c += (x - t) + self.s;
        }
        self.s = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.s + self.c
    }
}

/// Componentwise compensated sum of complex terms.
#[derive(Clone, Copy, Debug, Default)]
pub struct ComplexSum {
    re: CompensatedSum,
    im: CompensatedSum,
}

impl ComplexSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_tail() {
        let mut s = CompensatedSum::new();
        s.add(1e16);
        for _ in 0..10 {
            s.add(0.1);
        }
        s.add(-1e16);
        assert!((s.value() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn complex_componentwise() {
        let mut s = ComplexSum::new();
        for k in 0..1000 {
            let th = k as f64 * 0.7;
            s.add(Complex64::new(th.cos(), th.sin()));
            s.add(Complex64::new(-th.cos(), -th.sin()));
        }
        assert!(s.value().norm() < 1e-14);
    }
}
