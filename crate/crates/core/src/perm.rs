//! Permutations of `{0, …, n-1}` with cycle decomposition, parity and
//! commutation tests.
//!
//! Points are 0-based in memory and 1-based in every piece of text this
//! module reads or writes. Composition is right to left:
//! `(a * b)(x) = a(b(x))`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported degree; images are stored as bytes.
pub const MAX_DEGREE: usize = u8::MAX as usize;

/// A bijection on `degree` points, stored as its image sequence.
///
/// The derived ordering is lexicographic on the image sequence, which is the
/// canonical ordering used for element lists and certificates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u8]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DEGREE {
        Err(Error::UnsupportedDegree(n))
    } else {
        Ok(())
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        assert!(degree >= 1 && degree <= MAX_DEGREE, "unsupported degree {degree}");
        Permutation {
            images: (0..degree).map(|i| i as u8).collect(),
        }
    }

    pub fn from_images(images: &[usize]) -> Result<Permutation> {
        let n = images.len();
        check_degree(n)?;
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || seen[x] {
                return Err(Error::NotABijection(n));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// Builds a permutation from disjoint 0-based cycles. Cycles of length
    /// one are accepted and ignored.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Permutation> {
        check_degree(degree)?;
        let mut images: Vec<u8> = (0..degree).map(|i| i as u8).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &p in cycle {
                if p >= degree {
                    return Err(Error::PointOutOfRange { point: p + 1, degree });
                }
                if used[p] {
                    return Err(Error::RepeatedPoint { point: p + 1 });
                }
                used[p] = true;
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(i + 1) % cycle.len()] as u8;
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// A single cycle on the given 0-based points.
    pub fn cycle(degree: usize, points: &[usize]) -> Result<Permutation> {
        Permutation::from_cycles(degree, &[points])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// `self ∘ other`, i.e. `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let n = self.degree();
        let mut images = vec![0u8; n];
        let mut done = vec![false; n];
        for start in 0..n {
            if done[start] {
                continue;
            }
            let mut orbit = vec![start];
            done[start] = true;
            let mut x = self.apply(start);
            while x != start {
                done[x] = true;
                orbit.push(x);
                x = self.apply(x);
            }
            let len = orbit.len() as i64;
            let shift = exp.rem_euclid(len) as usize;
            for (i, &p) in orbit.iter().enumerate() {
                images[p] = orbit[(i + shift) % orbit.len()] as u8;
            }
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// `q · self · q⁻¹`.
    pub fn conjugate_by(&self, q: &Permutation) -> Permutation {
        assert_eq!(self.degree(), q.degree(), "degree mismatch");
        let mut images = vec![0u8; self.degree()];
        for i in 0..self.degree() {
            images[q.apply(i)] = q.images[self.apply(i)];
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Some `x` with `x · self · x⁻¹ = other`, if the two are conjugate in
    /// the symmetric group. Cycles are matched in order of length, then of
    /// least point.
    pub fn conjugator_to(&self, other: &Permutation) -> Option<Permutation> {
        if self.degree() != other.degree() || self.cycle_type() != other.cycle_type() {
            return None;
        }
        let orbits = |q: &Permutation| {
            let mut all = q.cycles();
            all.extend(q.fixed_points().into_iter().map(|p| vec![p]));
            all.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
            all
        };
        let mut images = vec![0usize; self.degree()];
        for (from, to) in orbits(self).iter().zip(orbits(other).iter()) {
            for (&a, &b) in from.iter().zip(to.iter()) {
                images[a] = b;
            }
        }
        Some(Permutation::from_images(&images).expect("matched orbits form a bijection"))
    }

    /// Commutation test; panics when the degrees differ.
    #[inline]
    pub fn commutes_with(&self, other: &Permutation) -> bool {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        self.images
            .iter()
            .zip(other.images.iter())
            .all(|(&a, &b)| self.images[b as usize] == other.images[a as usize])
    }

    /// Disjoint cycles of length at least two, each starting at its least
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut parts: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType {
            parts,
            degree: self.degree(),
        }
    }

    pub fn parity(&self) -> Parity {
        self.cycle_type().parity()
    }

    pub fn is_even(&self) -> bool {
        self.parity().is_even()
    }

    /// Moved points, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.apply(i) != i).collect()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.apply(i) == i).collect()
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Parses 1-based disjoint-cycle notation such as `"(1,2)(3,4,5)"`.
    /// The empty string and `"()"` denote the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Permutation> {
        check_degree(degree)?;
        let cycles = parse_cycle_list(text, degree)?;
        Permutation::from_cycles(degree, &cycles)
    }

    /// Renders the permutation in 1-based cycle notation; `"()"` for the
    /// identity.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

fn parse_cycle_list(text: &str, degree: usize) -> Result<Vec<Vec<usize>>> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut cycles = Vec::new();
    let malformed = |offset: usize, reason: &str| Error::Malformed {
        offset,
        reason: reason.to_string(),
    };
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let mut seen = vec![false; degree];
    loop {
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'(' {
            return Err(malformed(pos, "expected '('"));
        }
        pos += 1;
        let mut cycle = Vec::new();
        skip_ws(&mut pos);
        if pos < bytes.len() && bytes[pos] == b')' {
            pos += 1;
            continue;
        }
        loop {
            skip_ws(&mut pos);
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(malformed(pos, "expected a point"));
            }
            let point: usize = text[start..pos]
                .parse()
                .map_err(|_| malformed(start, "point does not fit"))?;
            if point == 0 || point > degree {
                return Err(Error::PointOutOfRange { point, degree });
            }
            if seen[point - 1] {
                return Err(Error::RepeatedPoint { point });
            }
            seen[point - 1] = true;
            cycle.push(point - 1);
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b')') => {
                    pos += 1;
                    break;
                }
                _ => return Err(malformed(pos, "expected ',' or ')'")),
            }
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Every permutation of `degree` points in lexicographic order. Intended for
/// brute-force cross-checks at small degree.
pub fn all_permutations(degree: usize) -> AllPermutations {
    check_degree(degree).expect("unsupported degree");
    AllPermutations {
        next: Some((0..degree).collect()),
    }
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let perm = Permutation::from_images(&current).expect("bijection");
        let mut v = current;
        let n = v.len();
        let mut i = n - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i > 0 {
            let mut j = n - 1;
            while v[j] <= v[i - 1] {
                j -= 1;
            }
            v.swap(i - 1, j);
            v[i..].reverse();
            self.next = Some(v);
        }
        Some(perm)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Right-to-left composition; panics on degree mismatch.
impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self, self.degree())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    a.compose(b)
}

pub fn commutes(a: &Permutation, b: &Permutation) -> Result<bool> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(a.commutes_with(b))
}

/// Multiset of cycle lengths (all at least two) on an ambient degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
    degree: usize,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>, degree: usize) -> Result<CycleType> {
        check_degree(degree)?;
        parts.retain(|&p| p != 1);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let render = || join_parts(&parts);
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::MalformedCycleType(render()));
        }
        if parts.iter().sum::<usize>() > degree {
            return Err(Error::CycleTypeTooLarge {
                cycle_type: render(),
                degree,
            });
        }
        Ok(CycleType { parts, degree })
    }

    /// Parses hyphen-separated lengths such as `"6-3-3-2"`. Parts equal to
    /// one are dropped; `""` and `"1"` denote the identity type.
    pub fn parse(text: &str, degree: usize) -> Result<CycleType> {
        let text = text.trim();
        if text.is_empty() {
            return CycleType::new(Vec::new(), degree);
        }
        let parts = text
            .split('-')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::MalformedCycleType(text.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        CycleType::new(parts, degree)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn moved_points(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn fixed_points(&self) -> usize {
        self.degree - self.moved_points()
    }

    pub fn is_identity(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parity(&self) -> Parity {
        if self.parts.iter().map(|p| p - 1).sum::<usize>() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity().is_even()
    }

    /// Cycle length ↦ multiplicity, excluding fixed points.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `|C_{S_n}(g)| = ∏ ℓ^{m_ℓ} m_ℓ! · f!` for any `g` of this type.
    pub fn sym_centralizer_order(&self) -> u128 {
        let mut order: u128 = factorial(self.fixed_points());
        for (len, mult) in self.multiplicities() {
            order *= (len as u128).pow(mult as u32) * factorial(mult);
        }
        order
    }

    /// Lexicographically least permutation of this type: fixed points
    /// first, then cycles of increasing length on consecutive points.
    pub fn representative(&self) -> Permutation {
        let mut cycles = Vec::with_capacity(self.parts.len());
        let mut next = self.fixed_points();
        for &len in self.parts.iter().rev() {
            cycles.push((next..next + len).collect::<Vec<_>>());
            next += len;
        }
        Permutation::from_cycles(self.degree, &cycles).expect("valid cycle type")
    }

    /// All cycle types on `degree` points, in decreasing lexicographic order
    /// of their parts, starting from the identity type.
    pub fn all(degree: usize) -> Vec<CycleType> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        partitions(degree, degree, &mut current, &mut out);
        let mut types: Vec<CycleType> = out
            .into_iter()
            .map(|parts| CycleType::new(parts, degree).expect("partition fits"))
            .collect();
        types.sort_by(|a, b| a.parts.len().cmp(&b.parts.len()).then(b.parts.cmp(&a.parts)));
        types.dedup();
        types
    }
}

fn partitions(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for part in (1..=max.min(remaining)).rev() {
        current.push(part);
        partitions(remaining - part, part, current, out);
        current.pop();
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn join_parts(parts: &[usize]) -> String {
    if parts.is_empty() {
        return "1".to_string();
    }
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("-")
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_parts(&self.parts))
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self, self.degree)
    }
}

impl Serialize for CycleType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    #[test]
    fn compose_examples() {
        let a = p("(1,2,3)(5,6)", 6);
        assert_eq!(compose(&a, &Permutation::identity(6)).unwrap(), a);
        let t = p("(1,2)", 4);
        assert!(compose(&t, &t).unwrap().is_identity());
        let c = p("(1,2,3)", 3);
        assert_eq!(compose(&c, &c).unwrap(), p("(1,3,2)", 3));
        assert!(matches!(
            compose(&c, &t),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn composition_is_right_to_left() {
        let a = p("(1,2)", 3);
        let b = p("(2,3)", 3);
        // b first: 1 -> 1 -> 2
        assert_eq!((&a * &b).apply(0), 1);
        assert_eq!((&a * &b).apply(1), 2);
    }

    #[test]
    fn cycle_decomposition_of_long_element() {
        let sigma = p("(4,5)(6,7,8)(9,10,11,12,13,14,15,16)", 16);
        let cycles = sigma.cycles();
        assert_eq!(
            cycles.iter().map(Vec::len).collect::<Vec<_>>(),
            vec![2, 3, 8]
        );
        assert_eq!(cycles[0], vec![3, 4]);
        assert!(Permutation::identity(5).cycles().is_empty());
    }

    #[test]
    fn cycle_types() {
        let tau = p(
            "(4,5)(6,7,8)(9,10,11,12,13,14,15,16)(17,18,19,20,21)",
            21,
        );
        assert_eq!(tau.cycle_type().parts(), &[8, 5, 3, 2]);
        assert!(Permutation::identity(4).cycle_type().parts().is_empty());
        assert_eq!(p("(1,3,2,4)(5,7,6,8)", 8).cycle_type().parts(), &[4, 4]);
        assert_eq!(p("(1,3,2,4)(5,7,6,8)", 8).cycle_type().to_string(), "4-4");
    }

    #[test]
    fn parities() {
        assert_eq!(p("(2,5,7)", 8).parity(), Parity::Even);
        assert_eq!(p("(3,4)", 8).parity(), Parity::Odd);
        assert_eq!(p("(1,2,3,4)(5,6,7,8)", 8).parity(), Parity::Even);
    }

    #[test]
    fn commutation_examples() {
        assert!(p("(1,2)", 5).commutes_with(&p("(3,4,5)", 5)));
        let a = p("(1,4,2,5,3)", 5);
        assert!(a.commutes_with(&a.inverse()));
        let gamma = "(9,10,11,12,13,14,15,16)";
        let a1 = p(&format!("(1,2,3)(7,8){gamma}"), 16);
        let a8 = p(&format!("(2,3,4)(7,8){gamma}"), 16);
        assert!(!commutes(&a1, &a8).unwrap());
        assert!(commutes(&a1, &Permutation::identity(3)).is_err());
    }

    #[test]
    fn conjugators() {
        let a = p("(1,2,3)(4,5)", 6);
        let b = p("(2,6)(1,5,4)", 6);
        let x = a.conjugator_to(&b).unwrap();
        assert_eq!(a.conjugate_by(&x), b);
        assert!(a.conjugator_to(&p("(1,2,3)", 6)).is_none());
    }

    #[test]
    fn parse_and_render() {
        let q = p("(4,5)(6,7,8)", 8);
        assert_eq!(q.cycles(), vec![vec![3, 4], vec![5, 6, 7]]);
        assert!(p("()", 4).is_identity());
        assert!(p("", 4).is_identity());
        assert!(p(" ( 2 , 3 ) (1) ", 4) == p("(2,3)", 4));
        assert_eq!(p("(3,1,2)", 3).render(), "(1,2,3)");
        assert_eq!(
            Permutation::parse("(1,1,2)", 3),
            Err(Error::RepeatedPoint { point: 1 })
        );
        assert_eq!(
            Permutation::parse("(1,2)(2,3)", 3),
            Err(Error::RepeatedPoint { point: 2 })
        );
        assert_eq!(
            Permutation::parse("(1,9)", 8),
            Err(Error::PointOutOfRange { point: 9, degree: 8 })
        );
        assert!(matches!(
            Permutation::parse("(1,2", 3),
            Err(Error::Malformed { .. })
        ));
        assert!(matches!(
            Permutation::parse("1,2)", 3),
            Err(Error::Malformed { .. })
        ));
        assert!(matches!(
            Permutation::parse("(1,,2)", 3),
            Err(Error::Malformed { .. })
        ));
    }

    #[test]
    fn cycle_type_parsing_and_representatives() {
        let t = CycleType::parse("3-4-4", 11).unwrap();
        assert_eq!(t.parts(), &[4, 4, 3]);
        assert_eq!(t.to_string(), "4-4-3");
        assert_eq!(t.representative().cycle_type(), t);
        assert_eq!(t.representative().render(), "(1,2,3)(4,5,6,7)(8,9,10,11)");
        assert!(CycleType::parse("4-4-4", 11).is_err());
        assert!(CycleType::parse("4-x", 11).is_err());
        assert_eq!(CycleType::parse("1", 3).unwrap().to_string(), "1");
    }

    #[test]
    fn representative_is_lexicographically_least() {
        let n = 6;
        let mut least: BTreeMap<CycleType, Permutation> = BTreeMap::new();
        for q in all_permutations(n) {
            least.entry(q.cycle_type()).or_insert(q);
        }
        assert_eq!(least.len(), CycleType::all(n).len());
        for (t, q) in least {
            assert_eq!(t.representative(), q, "type {t}");
        }
    }

    #[test]
    fn enumerates_symmetric_group() {
        let all: Vec<_> = all_permutations(5).collect();
        assert_eq!(all.len(), 120);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn centralizer_order_formula() {
        let t = CycleType::parse("4-4", 8).unwrap();
        assert_eq!(t.sym_centralizer_order(), 32);
        let t = CycleType::parse("6-6-3", 15).unwrap();
        assert_eq!(t.sym_centralizer_order(), 216);
    }

    #[test]
    fn partitions_count() {
        assert_eq!(CycleType::all(8).len(), 22);
        assert_eq!(CycleType::all(15).len(), 176);
        assert!(CycleType::all(5)[0].is_identity());
    }
}
