//! Exact arithmetic for the lattice (Z^{n+1}, f) where
//! f = -phi*x0^2 + x1^2 + ... + xn^2.

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::LatticeError;

pub type Rat = Ratio<i64>;

/// The diagonal quadratic form -phi*x0^2 + x1^2 + ... + xn^2 of signature (n, 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    phi: i64,
    n: usize,
}

impl QuadraticForm {
    pub fn new(phi: i64, n: usize) -> Result<Self, LatticeError> {
        if phi < 1 || n < 2 {
            return Err(LatticeError::InvalidForm { phi, n });
        }
        Ok(QuadraticForm { phi, n })
    }

    pub fn phi(&self) -> i64 {
        self.phi
    }

    /// Hyperbolic dimension n.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of coordinates, n + 1.
    pub fn dim(&self) -> usize {
        self.n + 1
    }

    fn check_len(&self, x: &[i64]) -> Result<(), LatticeError> {
        if x.len() != self.dim() {
            return Err(LatticeError::Dimension {
                expected: self.dim(),
                got: x.len(),
            });
        }
        Ok(())
    }

    /// (x, y) = -phi*x0*y0 + sum_{i>=1} xi*yi, exactly.
    pub fn inner_product(&self, x: &[i64], y: &[i64]) -> Result<i64, LatticeError> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.ip_unchecked(x, y))
    }

    pub(crate) fn ip_unchecked(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = -self.phi * x[0] * y[0];
        for i in 1..x.len() {
            s += x[i] * y[i];
        }
        s
    }

    pub fn norm(&self, x: &[i64]) -> Result<i64, LatticeError> {
        self.inner_product(x, x)
    }

    /// Candidate root norms: the divisors of 2*phi, in increasing order.
    ///
    /// This is a pruning superset; the per-root filter is `crystallographic_ok`.
    pub fn admissible_norms(&self) -> Vec<i64> {
        let target = 2 * self.phi;
        let mut divs: Vec<i64> = (1..=target).filter(|d| target % d == 0).collect();
        divs.sort_unstable();
        divs
    }

    /// True iff the reflection in `coords` (of norm `norm`) preserves Z^{n+1}:
    /// norm | 2*kj for all j >= 1 and norm | 2*phi*k0.
    pub fn crystallographic_ok(&self, coords: &[i64], norm: i64) -> bool {
        debug_assert!(norm > 0);
        if (2 * self.phi * coords[0]) % norm != 0 {
            return false;
        }
        coords[1..].iter().all(|&k| (2 * k) % norm == 0)
    }

    /// Reflection of `x` in the mirror of `root`: x - 2(x,e)/(e,e) * e.
    ///
    /// Rational in general; integral whenever the root is crystallographic
    /// and x is a lattice vector.
    pub fn reflect(&self, root: &Root, x: &[i64]) -> Result<Vec<Rat>, LatticeError> {
        self.check_len(x)?;
        let ip = self.ip_unchecked(x, root.coords());
        let factor = Rat::new(2 * ip, root.norm());
        Ok(x.iter()
            .zip(root.coords())
            .map(|(&xi, &ei)| Rat::from_integer(xi) - factor * Rat::from_integer(ei))
            .collect())
    }
}

/// True iff gcd of all coordinates is 1.
pub fn is_primitive(x: &[i64]) -> Result<bool, LatticeError> {
    let mut g: i64 = 0;
    for &k in x {
        g = g.gcd(&k);
    }
    if g == 0 {
        return Err(LatticeError::ZeroVector);
    }
    Ok(g == 1)
}

/// A primitive integer vector of positive norm whose reflection preserves the
/// lattice; the normal of a reflecting hyperplane.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coords: Vec<i64>,
    norm: i64,
}

impl Root {
    pub fn new(form: &QuadraticForm, coords: Vec<i64>) -> Result<Self, LatticeError> {
        let norm = form.norm(&coords)?;
        if norm <= 0 {
            return Err(LatticeError::NonPositiveNorm { norm });
        }
        if !is_primitive(&coords)? {
            return Err(LatticeError::NotPrimitive);
        }
        if !form.crystallographic_ok(&coords, norm) {
            return Err(LatticeError::NotCrystallographic);
        }
        Ok(Root { coords, norm })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn norm(&self) -> i64 {
        self.norm
    }

    /// Time-like coefficient k0.
    pub fn k0(&self) -> i64 {
        self.coords[0]
    }

    /// Distance ordering key k0^2 / (e,e) from the minimization target.
    pub fn priority(&self) -> Rat {
        Rat::new(self.coords[0] * self.coords[0], self.norm)
    }
}
