use crate::linear::LinearPoly;
use crate::linear_power::linear_power_detect;
use crate::pairs::linear_equiv_all;
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::{QLinear, QPoly};

use super::{require_degree, DecomposeError};

/// `f = outer ∘ xⁿ ∘ inner`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicForm<T: Scalar> {
    pub outer: LinearPoly<T>,
    pub n: usize,
    pub inner: LinearPoly<T>,
}

impl<T: Scalar> CyclicForm<T> {
    pub fn expand(&self) -> Poly<T> {
        self.outer.to_poly().compose(&Poly::monomial(T::one(), self.n)).compose(&self.inner.to_poly())
    }
}

pub fn detect_cyclic<T: Scalar>(f: &Poly<T>) -> Result<Option<CyclicForm<T>>, DecomposeError> {
    let n = require_degree(f, 2)?;
    Ok(linear_power_detect(f).map(|lp| CyclicForm {
        outer: LinearPoly::new(lp.scale, lp.offset).expect("leading coefficient is nonzero"),
        n,
        inner: LinearPoly::translation(lp.shift),
    }))
}

/// All `μ` over ℚ with `f ∘ μ = f`. The identity is always among them.
pub fn rational_automorphisms(f: &QPoly) -> Result<Vec<QLinear>, DecomposeError> {
    require_degree(f, 2)?;
    Ok(linear_equiv_all(f, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64s(coeffs)
    }

    fn lin(a: i64, b: i64) -> QLinear {
        QLinear::new(int(a), int(b)).unwrap()
    }

    #[test]
    fn automorphisms_of_even_quartic() {
        let auts = rational_automorphisms(&p(&[0, 0, 1, 0, 1])).unwrap();
        assert_eq!(auts.len(), 2);
        assert!(auts.contains(&QLinear::identity()));
        assert!(auts.contains(&lin(-1, 0)));
    }

    #[test]
    fn automorphisms_trivial() {
        assert_eq!(rational_automorphisms(&p(&[0, 1, 0, 1])).unwrap(), vec![QLinear::identity()]);
        // symmetric about x = -1/2
        let auts = rational_automorphisms(&p(&[0, 0, 1, 2, 1])).unwrap();
        assert_eq!(auts.len(), 2);
        assert!(auts.contains(&lin(-1, -1)));
    }

    #[test]
    fn cyclic_forms() {
        let c = detect_cyclic(&p(&[1, 3, 3, 1])).unwrap().unwrap();
        assert_eq!(c, CyclicForm { outer: QLinear::identity(), n: 3, inner: lin(1, 1) });
        let c = detect_cyclic(&p(&[5, 0, 0, 0, 2])).unwrap().unwrap();
        assert_eq!(c, CyclicForm { outer: lin(2, 5), n: 4, inner: QLinear::identity() });
        assert_eq!(c.expand(), p(&[5, 0, 0, 0, 2]));
        assert_eq!(detect_cyclic(&p(&[0, 1, 0, 0, 1])).unwrap(), None);
        assert!(detect_cyclic(&p(&[0, 1])).is_err());
    }

    #[test]
    fn cyclic_over_floats() {
        let f = Poly::<f64>::from_coeffs(vec![8.0, 12.0, 6.0, 1.0]);
        let c = detect_cyclic(&f).unwrap().unwrap();
        assert_eq!(c.inner.intercept(), &2.0);
    }
}
