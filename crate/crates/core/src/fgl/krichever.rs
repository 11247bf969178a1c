//! The Krichever exponential `x exp(ax) exp(int_0^x (zeta(z-s) - zeta(z)) ds) sigma(x)/x`
//! over the free ring `Q[a, p2, p3, g2]`, where `p2 = wp(z)`, `p3 = wp'(z)`.


use super::FglError;
use crate::algebra::{integer, rational, LinearForm, MultiSeries, Poly, Rational, Ring};

pub(crate) fn krichever_ring() -> Ring {
    Ring::from_names(&[("a", 2), ("p2", 4), ("p3", 6), ("g2", 8)]).expect("valid ring")
}

/// The derivation `d/dz` on `Q[a, p2, p3, g2]`: `p2' = p3`, `p3' = 6 p2^2 - g2/2`.
fn dz(p: &Poly, p3: &Poly, dp3: &Poly) -> Poly {
    let ring = p.ring();
    let i2 = ring.index_of("p2").expect("p2");
    let i3 = ring.index_of("p3").expect("p3");
    &(&p.derivative(i2) * p3) + &(&p.derivative(i3) * dp3)
}

/// Laurent coefficients `c_j` (`j >= 2`) of `wp(x) = x^-2 + sum c_j x^{2j-2}`,
/// as polynomials in `g2` and `g3 = 4 p2^3 - g2 p2 - p3^2`.
fn wp_laurent(ring: &Ring, up_to: u32) -> Vec<Poly> {
    let p2 = Poly::generator(ring, "p2").expect("p2");
    let p3 = Poly::generator(ring, "p3").expect("p3");
    let g2 = Poly::generator(ring, "g2").expect("g2");
    let g3 = &(&p2.pow(3).scale(&integer(4)) - &(&g2 * &p2)) - &p3.pow(2);
    let mut c = vec![Poly::zero(ring); (up_to as usize + 1).max(4)];
    c[2] = g2.scale(&rational(1, 20));
    c[3] = g3.scale(&rational(1, 28));
    for j in 4..=up_to as usize {
        let mut s = Poly::zero(ring);
        for i in 2..=j - 2 {
            s = &s + &(&c[i] * &c[j - i]);
        }
        c[j] = s.scale(&rational(3, ((2 * j + 1) * (j - 3)) as i64));
    }
    c
}

/// The exponential truncated at `order`.
pub(crate) fn krichever_series(order: u32) -> Result<MultiSeries, FglError> {
    let ring = krichever_ring();
    if order == 0 {
        return Ok(MultiSeries::zero(&ring, 1, 0));
    }
    let a = Poly::generator(&ring, "a")?;
    let p2 = Poly::generator(&ring, "p2")?;
    let p3 = Poly::generator(&ring, "p3")?;
    let g2 = Poly::generator(&ring, "g2")?;
    let dp3 = &p2.pow(2).scale(&integer(6)) - &g2.scale(&rational(1, 2));
    // The exponent E(x) with f = x exp(E), needed through x^{order-1}.
    let inner = order - 1;
    let mut e = vec![Poly::zero(&ring); inner as usize + 1];
    if inner >= 1 {
        e[1] = a;
    }
    // sum_j (-1)^j wp^{(j)}(z) x^{j+2}/(j+2)!
    let mut deriv = p2.clone();
    let mut fact = Rational::from_integer(2.into());
    for j in 0..inner.saturating_sub(1) {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        e[j as usize + 2] = &e[j as usize + 2] + &deriv.scale(&(integer(sign) / &fact));
        deriv = dz(&deriv, &p3, &dp3);
        fact *= integer(j as i64 + 3);
    }
    // ln(sigma(x)/x) = -sum_{j>=2} c_j x^{2j}/(2j(2j-1))
    let c = wp_laurent(&ring, inner / 2);
    for j in 2..=inner / 2 {
        let k = 2 * j as i64;
        let idx = 2 * j as usize;
        e[idx] = &e[idx] - &c[j as usize].scale(&rational(1, k * (k - 1)));
    }
    debug_assert!(e[0].is_zero());
    let e = MultiSeries::univariate(&ring, inner, &e);
    let x = LinearForm::new(vec![1])?;
    Ok(e.exp()?.mul_linear_form(&x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    #[test]
    fn laurent_coefficients() {
        let ring = krichever_ring();
        let c = wp_laurent(&ring, 4);
        assert_eq!(c[4], parse_poly(&ring, "g2^2/1200").unwrap());
    }

    #[test]
    fn leading_terms() {
        let f = krichever_series(5).unwrap();
        let ring = f.ring().clone();
        assert_eq!(f.coefficient(&[1]), Poly::one(&ring));
        assert_eq!(f.coefficient(&[2]), parse_poly(&ring, "a").unwrap());
        assert_eq!(
            f.coefficient(&[3]),
            parse_poly(&ring, "a^2/2 + p2/2").unwrap()
        );
        // x^4: a^3/6 + a p2/2 - p3/6
        assert_eq!(
            f.coefficient(&[4]),
            parse_poly(&ring, "a^3/6 + a*p2/2 - p3/6").unwrap()
        );
    }
}
