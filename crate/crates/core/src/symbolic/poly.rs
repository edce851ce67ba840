//! Multivariate polynomials with complex coefficients, used as the prefactor
//! algebra for the closed-form function families.

use num_complex::Complex64;

/// Sparse polynomial: a map from exponent vectors (length = dimension) to
/// coefficients, kept sorted and free of zero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly {
    dimension: u32,
    terms: Vec<(Vec<u32>, Complex64)>,
}

const COEFF_EPS: f64 = 0.0;

impl MultiPoly {
    pub fn zero(dimension: u32) -> Self {
        MultiPoly {
            dimension,
            terms: Vec::new(),
        }
    }

    pub fn constant(dimension: u32, value: Complex64) -> Self {
        let mut p = MultiPoly::zero(dimension);
        if value.norm_sqr() > COEFF_EPS {
            p.terms.push((vec![0; dimension as usize], value));
        }
        p
    }

    pub fn one(dimension: u32) -> Self {
        MultiPoly::constant(dimension, Complex64::new(1.0, 0.0))
    }

    /// The coordinate monomial `x_axis`.
    pub fn coordinate(dimension: u32, axis: usize) -> Self {
        assert!(axis < dimension as usize);
        let mut exps = vec![0; dimension as usize];
        exps[axis] = 1;
        MultiPoly {
            dimension,
            terms: vec![(exps, Complex64::new(1.0, 0.0))],
        }
    }

    /// Univariate polynomial `Σ coeffs[k]·x₁^k` over ℝⁿ.
    pub fn univariate(dimension: u32, coeffs: &[Complex64]) -> Self {
        let mut p = MultiPoly::zero(dimension);
        for (k, &c) in coeffs.iter().enumerate() {
            if c.norm_sqr() > COEFF_EPS {
                let mut exps = vec![0; dimension as usize];
                exps[0] = k as u32;
                p.terms.push((exps, c));
            }
        }
        p.normalize();
        p
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    fn normalize(&mut self) {
        self.terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Vec<u32>, Complex64)> = Vec::with_capacity(self.terms.len());
        for (e, c) in self.terms.drain(..) {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| c.norm_sqr() > COEFF_EPS);
        self.terms = out;
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.dimension, other.dimension);
        let mut p = self.clone();
        p.terms.extend(other.terms.iter().cloned());
        p.normalize();
        p
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.dimension, other.dimension);
        let mut p = MultiPoly::zero(self.dimension);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                p.terms.push((exps, ca * cb));
            }
        }
        p.normalize();
        p
    }

    pub fn scale(&self, factor: Complex64) -> MultiPoly {
        let mut p = self.clone();
        for (_, c) in &mut p.terms {
            *c *= factor;
        }
        p.normalize();
        p
    }

    /// `∂/∂x_axis`.
    pub fn derivative(&self, axis: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(self.dimension);
        for (e, c) in &self.terms {
            if e[axis] == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[axis] -= 1;
            p.terms.push((exps, c * e[axis] as f64));
        }
        p.normalize();
        p
    }

    pub fn eval(&self, x: &[f64]) -> Complex64 {
        debug_assert_eq!(x.len(), self.dimension as usize);
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut m = 1.0;
            for (xi, &ei) in x.iter().zip(e) {
                m *= xi.powi(ei as i32);
            }
            acc += c * m;
        }
        acc
    }

    /// `p(x − shift)`, expanded by the binomial theorem.
    pub fn shift(&self, shift: &[f64]) -> MultiPoly {
        assert_eq!(shift.len(), self.dimension as usize);
        let mut out = MultiPoly::zero(self.dimension);
        for (e, c) in &self.terms {
            // expand Π (x_i − s_i)^{e_i}
            let mut partial = MultiPoly::constant(self.dimension, *c);
            for (axis, (&ei, &si)) in e.iter().zip(shift).enumerate() {
                let base = MultiPoly {
                    dimension: self.dimension,
                    terms: {
                        let mut t = Vec::new();
                        let mut exps = vec![0; self.dimension as usize];
                        exps[axis] = 1;
                        t.push((exps, Complex64::new(1.0, 0.0)));
                        if si != 0.0 {
                            t.push((vec![0; self.dimension as usize], Complex64::new(-si, 0.0)));
                        }
                        t
                    },
                };
                for _ in 0..ei {
                    partial = partial.mul(&base);
                }
            }
            out = out.add(&partial);
        }
        out
    }

    /// `p(c·x)`.
    pub fn dilate(&self, c: f64) -> MultiPoly {
        let mut p = self.clone();
        for (e, coeff) in &mut p.terms {
            let deg: u32 = e.iter().sum();
            *coeff *= c.powi(deg as i32);
        }
        p.normalize();
        p
    }
}
