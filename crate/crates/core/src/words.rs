//! Words in the surface group and elements of the torus fiber group.
//!
//! Surface-group words are kept freely reduced only; the surface relator is
//! never rewritten. Word equality therefore means equality in the free
//! group, which is a finer relation than equality in the surface group.
//! Every computation in this crate factors through the abelianization
//! (exponent vectors) or the fiber group, so nothing downstream depends on
//! the difference, but callers comparing words directly should keep it in
//! mind.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fibered::FiberedMapSpec;

/// Name of generator `index` in the fixed ordering a1, b1, a2, b2, ...
/// (index 2(i-1) is a_i, index 2(i-1)+1 is b_i).
pub fn generator_name(index: usize) -> String {
    let series = if index.is_multiple_of(2) { 'a' } else { 'b' };
    format!("{}{}", series, index / 2 + 1)
}

/// A freely reduced word in the 2g standard generators of a genus-g surface
/// group, stored as (generator index, nonzero exponent) letters with
/// adjacent letters on distinct generators.
#[derive(Clone, PartialEq, Eq)]
pub struct SurfaceWord {
    genus: usize,
    letters: Vec<(usize, BigInt)>,
}

impl SurfaceWord {
    /// The empty word. Panics if `genus < 2`.
    pub fn identity(genus: usize) -> Self {
        assert!(genus >= 2, "genus must be >= 2");
        SurfaceWord {
            genus,
            letters: Vec::new(),
        }
    }

    /// Single letter `generator^exponent`; exponent 0 gives the identity.
    pub fn generator_power(genus: usize, generator: usize, exponent: BigInt) -> Self {
        assert!(genus >= 2, "genus must be >= 2");
        assert!(generator < 2 * genus, "generator index out of range");
        let letters = if exponent.is_zero() {
            Vec::new()
        } else {
            vec![(generator, exponent)]
        };
        SurfaceWord { genus, letters }
    }

    /// Builds a word from arbitrary letters, freely reducing as needed.
    pub fn from_letters(genus: usize, letters: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        assert!(genus >= 2, "genus must be >= 2");
        let mut reduced: Vec<(usize, BigInt)> = Vec::new();
        for (generator, exponent) in letters {
            assert!(generator < 2 * genus, "generator index out of range");
            if exponent.is_zero() {
                continue;
            }
            match reduced.last_mut() {
                Some((top, e)) if *top == generator => {
                    *e += exponent;
                    if e.is_zero() {
                        reduced.pop();
                    }
                }
                _ => reduced.push((generator, exponent)),
            }
        }
        SurfaceWord {
            genus,
            letters: reduced,
        }
    }

    /// The canonical word a1^{v_0} b1^{v_1} a2^{v_2} ... with the given
    /// exponent vector (length 2g).
    pub fn from_exponents(genus: usize, exponents: &[BigInt]) -> Self {
        assert_eq!(
            exponents.len(),
            2 * genus,
            "exponent vector length must be 2g"
        );
        Self::from_letters(
            genus,
            exponents.iter().cloned().enumerate().collect::<Vec<_>>(),
        )
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn letters(&self) -> &[(usize, BigInt)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Freely reduced concatenation. Fails on genus mismatch.
    pub fn multiply(&self, other: &SurfaceWord) -> Result<SurfaceWord> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch {
                left: self.genus,
                right: other.genus,
            });
        }
        Ok(SurfaceWord::from_letters(
            self.genus,
            self.letters.iter().chain(&other.letters).cloned(),
        ))
    }

    pub fn inverse(&self) -> SurfaceWord {
        SurfaceWord {
            genus: self.genus,
            letters: self.letters.iter().rev().map(|(g, e)| (*g, -e)).collect(),
        }
    }

    /// Exponent-sum vector (the abelianization image): component i is the
    /// total exponent of generator i. A homomorphism to Z^{2g}, well defined
    /// on the surface group because the relator abelianizes to zero.
    pub fn exponent_vector(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); 2 * self.genus];
        for (generator, exponent) in &self.letters {
            v[*generator] += exponent;
        }
        v
    }

    /// Parses the word literal syntax: whitespace-separated generator tokens
    /// with an optional `^exponent`, e.g. `a1 b1^-1 a2^3`. Case-insensitive;
    /// the empty string and `1` denote the identity.
    pub fn parse(genus: usize, text: &str) -> Result<SurfaceWord> {
        if genus < 2 {
            return Err(Error::Parse(format!("genus >= 2 required, got {genus}")));
        }
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let lower = token.to_ascii_lowercase();
            if lower == "1" {
                continue;
            }
            let (name, exponent) = match lower.split_once('^') {
                Some((name, exp)) => {
                    let exponent: BigInt = exp.parse().map_err(|_| {
                        Error::Parse(format!("token '{token}': bad exponent '{exp}'"))
                    })?;
                    (name, exponent)
                }
                None => (lower.as_str(), BigInt::from(1)),
            };
            let series = name.as_bytes().first().copied();
            let index: usize = name[1..]
                .parse()
                .map_err(|_| Error::Parse(format!("token '{token}': expected a<i> or b<i>")))?;
            let offset = match series {
                Some(b'a') => 0,
                Some(b'b') => 1,
                _ => {
                    return Err(Error::Parse(format!(
                        "token '{token}': generator series must be 'a' or 'b'"
                    )))
                }
            };
            if index < 1 || index > genus {
                return Err(Error::Parse(format!(
                    "token '{token}': generator index must be in 1..={genus}"
                )));
            }
            letters.push((2 * (index - 1) + offset, exponent));
        }
        Ok(SurfaceWord::from_letters(genus, letters))
    }
}

impl fmt::Display for SurfaceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (generator, exponent) in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if exponent == &BigInt::from(1) {
                write!(f, "{}", generator_name(*generator))?;
            } else {
                write!(f, "{}^{}", generator_name(*generator), exponent)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SurfaceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of the fiber group Z^k, written additively as a coordinate
/// vector.
#[derive(Clone, PartialEq, Eq)]
pub struct FiberElement {
    coords: Vec<BigInt>,
}

impl FiberElement {
    pub fn new(coords: Vec<BigInt>) -> Self {
        assert!(!coords.is_empty(), "fiber rank must be >= 1");
        FiberElement { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![BigInt::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }
}

impl fmt::Display for FiberElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for FiberElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of the product group: a surface-group word paired with a
/// fiber vector.
#[derive(Clone, PartialEq, Eq)]
pub struct ProductElement {
    pub base: SurfaceWord,
    pub fiber: FiberElement,
}

impl ProductElement {
    pub fn new(base: SurfaceWord, fiber: FiberElement) -> Self {
        ProductElement { base, fiber }
    }

    /// (1, v): trivial base word, given fiber part.
    pub fn fiber_only(genus: usize, fiber: FiberElement) -> Self {
        ProductElement::new(SurfaceWord::identity(genus), fiber)
    }

    pub fn identity(genus: usize, rank: usize) -> Self {
        ProductElement::fiber_only(genus, FiberElement::zero(rank))
    }

    /// Direct-product multiplication: bases concatenate (freely reduced),
    /// fibers add.
    pub fn multiply(&self, other: &ProductElement) -> Result<ProductElement> {
        if self.fiber.rank() != other.fiber.rank() {
            return Err(Error::RankMismatch {
                left: self.fiber.rank(),
                right: other.fiber.rank(),
            });
        }
        Ok(ProductElement {
            base: self.base.multiply(&other.base)?,
            fiber: FiberElement::new(
                self.fiber
                    .coords()
                    .iter()
                    .zip(other.fiber.coords())
                    .map(|(a, b)| a + b)
                    .collect(),
            ),
        })
    }
}

impl fmt::Display for ProductElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.base, self.fiber)
    }
}

impl fmt::Debug for ProductElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_shapes(spec: &FiberedMapSpec, x: &ProductElement) -> Result<()> {
    if x.base.genus() != spec.genus() {
        return Err(Error::GenusMismatch {
            left: x.base.genus(),
            right: spec.genus(),
        });
    }
    if x.fiber.rank() != spec.fiber_rank() {
        return Err(Error::RankMismatch {
            left: x.fiber.rank(),
            right: spec.fiber_rank(),
        });
    }
    Ok(())
}

/// The induced endomorphism of the product group:
/// (u, v) -> (u, R nu(u) + Xi v), with the base fixed pointwise.
pub fn apply_endomorphism(spec: &FiberedMapSpec, x: &ProductElement) -> Result<ProductElement> {
    check_shapes(spec, x)?;
    let twist = spec.retraction().mul_vec(&x.base.exponent_vector());
    let scaled = spec.fiber_matrix().mul_vec(x.fiber.coords());
    let fiber = FiberElement::new(twist.iter().zip(&scaled).map(|(a, b)| a + b).collect());
    Ok(ProductElement {
        base: x.base.clone(),
        fiber,
    })
}

/// Twisted conjugation of `beta` by `gamma`: gamma^{-1} beta f(gamma).
///
/// Two labels name the same fixed point class exactly when they are related
/// by this action. Base parts conjugate (free reduction only); the fiber
/// part is -gamma_f + beta_f + R nu(gamma_b) + Xi gamma_f.
pub fn twisted_conjugate(
    spec: &FiberedMapSpec,
    beta: &ProductElement,
    gamma: &ProductElement,
) -> Result<ProductElement> {
    check_shapes(spec, beta)?;
    check_shapes(spec, gamma)?;
    let base = gamma
        .base
        .inverse()
        .multiply(&beta.base)?
        .multiply(&gamma.base)?;
    let twist = spec.retraction().mul_vec(&gamma.base.exponent_vector());
    let scaled = spec.fiber_matrix().mul_vec(gamma.fiber.coords());
    let coords = beta
        .fiber
        .coords()
        .iter()
        .zip(gamma.fiber.coords())
        .zip(twist.iter().zip(&scaled))
        .map(|((b, g), (t, s))| b - g + t + s)
        .collect();
    Ok(ProductElement {
        base,
        fiber: FiberElement::new(coords),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibered::FiberedMapSpec;

    fn w(genus: usize, text: &str) -> SurfaceWord {
        SurfaceWord::parse(genus, text).unwrap()
    }

    #[test]
    fn multiply_cancels_inverse() {
        let a = w(2, "a1");
        let product = a.multiply(&a.inverse()).unwrap();
        assert!(product.is_identity());
    }

    #[test]
    fn multiply_single_cancellation() {
        let left = w(2, "a1^2 b1");
        let right = w(2, "b1^-1 a2");
        assert_eq!(left.multiply(&right).unwrap(), w(2, "a1^2 a2"));
    }

    #[test]
    fn multiply_power_cancellation() {
        // a1^{s'-s} * a1^{s-s'} = 1 for any s, s'.
        for (s, s_prime) in [(0i64, 5i64), (-3, 3), (7, -2)] {
            let left = SurfaceWord::generator_power(2, 0, BigInt::from(s_prime - s));
            let right = SurfaceWord::generator_power(2, 0, BigInt::from(s - s_prime));
            assert!(left.multiply(&right).unwrap().is_identity());
        }
    }

    #[test]
    fn multiply_rejects_genus_mismatch() {
        let a = w(2, "a1");
        let b = w(3, "a1");
        assert_eq!(
            a.multiply(&b),
            Err(Error::GenusMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn exponent_vector_identity() {
        assert_eq!(
            SurfaceWord::identity(2).exponent_vector(),
            vec![BigInt::zero(); 4]
        );
    }

    #[test]
    fn exponent_vector_kills_relator() {
        let relator = w(2, "a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1");
        assert_eq!(relator.exponent_vector(), vec![BigInt::zero(); 4]);
    }

    #[test]
    fn exponent_vector_reads_exponents() {
        let word = w(2, "a1^3 b2^-1");
        let expect: Vec<BigInt> = [3, 0, 0, -1].iter().map(|&e| BigInt::from(e)).collect();
        assert_eq!(word.exponent_vector(), expect);
    }

    #[test]
    fn parse_rejects_bad_tokens() {
        assert!(SurfaceWord::parse(2, "c1").is_err());
        assert!(SurfaceWord::parse(2, "a3").is_err());
        assert!(SurfaceWord::parse(2, "a1^x").is_err());
        assert!(SurfaceWord::parse(2, "a").is_err());
        assert!(SurfaceWord::parse(1, "a1").is_err());
    }

    #[test]
    fn parse_is_case_insensitive_and_roundtrips() {
        let word = SurfaceWord::parse(2, "A1^2 B2^-3 a1").unwrap();
        assert_eq!(word, w(2, "a1^2 b2^-3 a1"));
        assert_eq!(SurfaceWord::parse(2, &word.to_string()).unwrap(), word);
        assert!(SurfaceWord::parse(2, "").unwrap().is_identity());
        assert!(SurfaceWord::parse(2, "1").unwrap().is_identity());
    }

    #[test]
    fn endomorphism_sends_a1_to_fiber_generator() {
        // For the torus-fiber family the retraction sends a1 to the first
        // fiber generator, independent of m.
        for m in [1i64, 2, 9] {
            let spec = FiberedMapSpec::theorem2_family(BigInt::from(m)).unwrap();
            let x = ProductElement::new(w(2, "a1"), FiberElement::from_i64(&[0, 0]));
            let y = apply_endomorphism(&spec, &x).unwrap();
            assert_eq!(y.base, w(2, "a1"));
            assert_eq!(y.fiber, FiberElement::from_i64(&[1, 0]));
        }
    }

    #[test]
    fn endomorphism_applies_fiber_matrix() {
        let spec = FiberedMapSpec::theorem2_family(BigInt::from(1)).unwrap();
        let x = ProductElement::fiber_only(2, FiberElement::from_i64(&[1, 0]));
        let y = apply_endomorphism(&spec, &x).unwrap();
        assert!(y.base.is_identity());
        assert_eq!(y.fiber, FiberElement::from_i64(&[2, 1]));
    }

    #[test]
    fn endomorphism_fixes_identity() {
        let spec = FiberedMapSpec::theorem2_family(BigInt::from(4)).unwrap();
        let e = ProductElement::identity(2, 2);
        assert_eq!(apply_endomorphism(&spec, &e).unwrap(), e);
    }

    #[test]
    fn twisted_conjugate_by_identity_fixes_label() {
        let spec = FiberedMapSpec::theorem1_family(BigInt::from(3)).unwrap();
        let beta = ProductElement::new(w(2, "b2^4"), FiberElement::from_i64(&[-2]));
        let gamma = ProductElement::identity(2, 1);
        assert_eq!(twisted_conjugate(&spec, &beta, &gamma).unwrap(), beta);
    }

    #[test]
    fn twisted_conjugate_shifts_circle_fiber_label() {
        // Conjugating (1, s) by (a1^{s'-s}, 0) yields (1, s') in the k = 1
        // family for every m.
        for m in [1i64, 2, 7] {
            let spec = FiberedMapSpec::theorem1_family(BigInt::from(m)).unwrap();
            for (s, s_prime) in [(0i64, 1i64), (-4, 9), (5, 5), (3, -8)] {
                let beta = ProductElement::fiber_only(2, FiberElement::from_i64(&[s]));
                let gamma = ProductElement::new(
                    SurfaceWord::generator_power(2, 0, BigInt::from(s_prime - s)),
                    FiberElement::zero(1),
                );
                let moved = twisted_conjugate(&spec, &beta, &gamma).unwrap();
                assert_eq!(
                    moved,
                    ProductElement::fiber_only(2, FiberElement::from_i64(&[s_prime]))
                );
            }
        }
    }

    #[test]
    fn twisted_conjugate_merge_witness_form() {
        // Conjugating (1, (s', t')) by (a1^{s''-s'}, (t''-t', t'-t'')) yields
        // (1, (s'', t'')) in the torus-fiber family.
        for m in [1i64, 3] {
            let spec = FiberedMapSpec::theorem2_family(BigInt::from(m)).unwrap();
            for (s1, t1, s2, t2) in [(0i64, 0i64, 1i64, 1i64), (2, 1, 5, 4), (-3, 2, 4, -5)] {
                let beta = ProductElement::fiber_only(2, FiberElement::from_i64(&[s1, t1]));
                let gamma = ProductElement::new(
                    SurfaceWord::generator_power(2, 0, BigInt::from(s2 - s1)),
                    FiberElement::from_i64(&[t2 - t1, t1 - t2]),
                );
                let moved = twisted_conjugate(&spec, &beta, &gamma).unwrap();
                assert_eq!(
                    moved,
                    ProductElement::fiber_only(2, FiberElement::from_i64(&[s2, t2]))
                );
            }
        }
    }

    #[test]
    fn twisted_conjugate_rejects_shape_mismatch() {
        let spec = FiberedMapSpec::theorem1_family(BigInt::from(1)).unwrap();
        let beta = ProductElement::identity(2, 2);
        let gamma = ProductElement::identity(2, 1);
        assert!(twisted_conjugate(&spec, &beta, &gamma).is_err());
    }
}
