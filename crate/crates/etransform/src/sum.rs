//! Compensated summation with a fixed order, so results do not depend on
//! how callers parallelise the work that produced the terms.

use num_complex::Complex;

use crate::scalar::Scalar;

/// Neumaier's variant of Kahan summation.
#[derive(Clone, Copy, Debug, Default)]
pub struct Neumaier<T> {
    sum: T,
    comp: T,
}

impl<T: Scalar> Neumaier<T> {
    pub fn new() -> Self {
        Neumaier { sum: T::zero(), comp: T::zero() }
    }

    pub fn add(&mut self, x: T) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> T {
        self.sum + self.comp
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ComplexSum<T> {
    re: Neumaier<T>,
    im: Neumaier<T>,
}

impl<T: Scalar> ComplexSum<T> {
    pub fn new() -> Self {
        ComplexSum { re: Neumaier::new(), im: Neumaier::new() }
    }

    pub fn add(&mut self, z: Complex<T>) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn value(&self) -> Complex<T> {
        Complex::new(self.re.value(), self.im.value())
    }
}

pub fn sum_complex<T: Scalar, I: IntoIterator<Item = Complex<T>>>(it: I) -> Complex<T> {
    let mut s = ComplexSum::new();
    for z in it {
        s.add(z);
    }
    s.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_small_terms() {
        let mut s = Neumaier::<f64>::new();
        for x in [1.0, 1e100, 1.0, -1e100] {
            s.add(x);
        }
        assert_eq!(s.value(), 2.0);
    }
}
