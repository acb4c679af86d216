use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};

/// Polynomial in `t_1..t_n` with rational coefficients.
///
/// Exponent vectors always have length `nvars`; zero coefficients are never
/// stored, so structural equality is polynomial equality. Keys are ordered
/// lexicographically with `t_1` most significant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl QPoly {
    pub fn zero(nvars: usize) -> Self {
        QPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    /// The variable `t_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Rational::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        QPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient if `self` is constant, else `None`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        QPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &QPoly, c: &Rational) {
        assert_eq!(self.nvars, other.nvars, "variable sets differ");
        for (e, x) in &other.terms {
            self.add_term(e.clone(), x * c);
        }
    }

    /// ∂/∂t_{i+1}.
    pub fn partial(&self, i: usize) -> Self {
        assert!(i < self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * Rational::from_integer(e[i].into()));
        }
        out
    }

    /// Substitutes `t_{i+1} ↦ subs[i]`; all substitutes share one target ring.
    pub fn compose(&self, subs: &[QPoly]) -> QPoly {
        assert_eq!(subs.len(), self.nvars, "one substitute per variable");
        let target = subs.first().map_or(0, |s| s.nvars);
        assert!(subs.iter().all(|s| s.nvars == target));
        let mut powers: Vec<Vec<QPoly>> = subs.iter().map(|s| vec![QPoly::one(s.nvars), s.clone()]).collect();
        let mut out = QPoly::zero(target);
        for (e, c) in &self.terms {
            let mut acc = QPoly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &subs[i];
                    powers[i].push(next);
                }
                acc = &acc * &powers[i][k as usize];
            }
            out.add_scaled(&acc, &Rational::one());
        }
        out
    }

    /// Re-expresses `self` in a ring with `nvars` variables, sending
    /// variable `i` to variable `map[i]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> QPoly {
        assert_eq!(map.len(), self.nvars);
        let mut out = QPoly::zero(nvars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; nvars];
            for (i, &k) in e.iter().enumerate() {
                e2[map[i]] += k;
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    m *= x;
                }
            }
            total += m;
        }
        total
    }

    /// Exact division by a monomial; `None` if some term is not divisible.
    pub fn div_monomial(&self, exps: &[u32]) -> Option<QPoly> {
        assert_eq!(exps.len(), self.nvars);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.iter().zip(exps).any(|(a, b)| a < b) {
                return None;
            }
            terms.insert(e.iter().zip(exps).map(|(a, b)| a - b).collect(), c.clone());
        }
        Some(QPoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Exact division by `divisor` (lex order); `None` if it does not divide.
    pub fn div_exact(&self, divisor: &QPoly) -> Option<QPoly> {
        assert_eq!(self.nvars, divisor.nvars);
        let (lead_e, lead_c) = divisor.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut quot = QPoly::zero(self.nvars);
        while let Some((e, c)) = rem.terms.iter().next_back() {
            if e.iter().zip(lead_e).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let qc = c / lead_c;
            let step = QPoly::monomial(self.nvars, qe, qc);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Some(quot)
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable sets differ");
        let mut out = QPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("t{}", i + 1)
                    } else {
                        format!("t{}^{}", i + 1, k)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", format_rational(c))?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(c), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qkernel::rational::rat;
    use proptest::prelude::*;

    fn t(n: usize, i: usize) -> QPoly {
        QPoly::var(n, i)
    }

    #[test]
    fn power_rule() {
        let p = &(&t(2, 0) * &t(2, 0)) * &t(2, 1);
        let expected = (&t(2, 0) * &t(2, 1)).scale(&rat(2));
        assert_eq!(p.partial(0), expected);
        assert!(t(2, 0).partial(1).is_zero());
    }

    #[test]
    fn binomial_square() {
        let s = &t(2, 0) + &t(2, 1);
        let sq = &s * &s;
        let expected = &(&(&t(2, 0) * &t(2, 0)) + &(&t(2, 0) * &t(2, 1)).scale(&rat(2)))
            + &(&t(2, 1) * &t(2, 1));
        assert_eq!(sq, expected);
    }

    #[test]
    fn composition_and_division() {
        // (t1 + t2)(1 - t1) evaluated through compose and divided back out.
        let l = &QPoly::one(2) - &t(2, 0);
        let p = &(&t(2, 0) + &t(2, 1)) * &l;
        assert_eq!(p.div_exact(&l).unwrap(), &t(2, 0) + &t(2, 1));
        assert!(t(2, 1).div_exact(&l).is_none());
        let shifted = p.compose(&[t(2, 1), t(2, 0)]);
        assert_eq!(shifted.eval(&[rat(2), rat(3)]), p.eval(&[rat(3), rat(2)]));
        let m = &(&t(2, 0) * &t(2, 0)) * &t(2, 1);
        assert_eq!(m.div_monomial(&[1, 1]).unwrap(), t(2, 0));
        assert!(m.div_monomial(&[0, 2]).is_none());
    }

    fn poly3() -> impl Strategy<Value = QPoly> {
        proptest::collection::vec(((0u32..3, 0u32..3, 0u32..3), -4i64..=4), 0..5).prop_map(|ts| {
            let mut p = QPoly::zero(3);
            for ((a, b, c), k) in ts {
                p.add_scaled(&QPoly::monomial(3, vec![a, b, c], rat(k)), &rat(1));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in poly3(), b in poly3(), c in poly3()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn leibniz_rule(a in poly3(), b in poly3()) {
            let lhs = (&a * &b).partial(1);
            let rhs = &(&a.partial(1) * &b) + &(&a * &b.partial(1));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
