//! Truncated multivariate series: arithmetic, inversion and MacMahon products.

use num_bigint::BigInt;
use orbifold_vertex::qseries::{macmahon, macmahon_family, pochhammer, LaurentMonomial, MacMahon};
use orbifold_vertex::{Monomial, Result, Series};

fn main() -> Result<()> {
    // One variable, truncated at degree 5.
    let q = Monomial::var(1, 0);
    let m = macmahon(&LaurentMonomial::one(1), &q, 5)?;
    println!("M(q) = {m}");
    println!("plane partitions by size: {:?}", m.degree_sums());

    // (q; q)_∞ and its inverse, the partition generating function.
    let euler = pochhammer(&q, &q, 8)?;
    println!("(q;q) = {euler}");
    println!("1/(q;q) = {}", euler.invert()?);

    // Four color variables q0, qa, qb, qc with q = q0 qa qb qc.
    let q4 = Monomial::new(vec![1, 1, 1, 1]);
    let x = LaurentMonomial::from(&Monomial::product_of(4, &[1, 2]));
    let tilde = macmahon_family(MacMahon::Tilde, &x, &q4, 6)?;
    println!("M~(qa qb) has {} terms up to degree 6", tilde.len());

    let a = Series::monomial(4, 6, Monomial::var(4, 1), BigInt::from(3));
    let b = Series::one(4, 6).sub(&Series::monomial(4, 6, Monomial::var(4, 2), BigInt::from(1)))?;
    println!("3qa / (1 - qb) = {}", a.mul(&b.invert()?)?);
    Ok(())
}
