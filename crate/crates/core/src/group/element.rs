use std::fmt;

use crate::error::{Error, Result};
use crate::formulas::TorusParams;

/// One syllable `x_letter ^ exp`, with `1 <= exp < order(letter)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub letter: u8,
    pub exp: u32,
}

/// Canonical form `z^z_exp * s_1 s_2 ... s_k` of a group element: adjacent
/// syllables carry different letters and every exponent is a residue in
/// `[1, order - 1]`. Each element has exactly one such form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalElement {
    z_exp: i64,
    syllables: Vec<Syllable>,
}

impl CanonicalElement {
    pub fn z_exp(&self) -> i64 {
        self.z_exp
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.z_exp == 0 && self.syllables.is_empty()
    }

    /// The image with the central factor dropped.
    pub fn without_center(&self) -> Self {
        Self {
            z_exp: 0,
            syllables: self.syllables.clone(),
        }
    }
}

/// `<x_1, ..., x_r, z | x_1^p_1 = ... = x_r^p_r = z>`. With two factors this
/// is the torus link group on generators `x`, `y`, `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusGroup {
    orders: Vec<u32>,
}

impl TorusGroup {
    pub fn new(params: TorusParams) -> Self {
        Self {
            orders: vec![params.p(), params.q()],
        }
    }

    /// Any number of factors, each of order at least 2.
    pub fn with_orders(orders: &[u32]) -> Result<Self> {
        if orders.is_empty() || orders.len() > u8::MAX as usize {
            return Err(Error::InvalidOddList(orders.to_vec()));
        }
        if let Some(&bad) = orders.iter().find(|&&p| p < 2) {
            return Err(Error::InvalidOrder(bad));
        }
        Ok(Self {
            orders: orders.to_vec(),
        })
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn identity(&self) -> CanonicalElement {
        CanonicalElement::default()
    }

    pub fn z_power(&self, k: i64) -> CanonicalElement {
        CanonicalElement {
            z_exp: k,
            syllables: Vec::new(),
        }
    }

    /// `x_letter ^ e` for any integer `e`.
    pub fn letter_power(&self, letter: u8, e: i64) -> CanonicalElement {
        let order = i64::from(self.orders[letter as usize]);
        let rem = e.rem_euclid(order);
        CanonicalElement {
            z_exp: e.div_euclid(order),
            syllables: if rem == 0 {
                Vec::new()
            } else {
                vec![Syllable {
                    letter,
                    exp: rem as u32,
                }]
            },
        }
    }

    /// `x_1, x_1^-1, ..., x_r, x_r^-1, z, z^-1`.
    pub fn generators(&self) -> Vec<CanonicalElement> {
        let mut gens = Vec::with_capacity(2 * self.orders.len() + 2);
        for letter in 0..self.orders.len() as u8 {
            gens.push(self.letter_power(letter, 1));
            gens.push(self.letter_power(letter, -1));
        }
        gens.push(self.z_power(1));
        gens.push(self.z_power(-1));
        gens
    }

    pub fn is_canonical(&self, a: &CanonicalElement) -> bool {
        a.syllables.iter().all(|s| {
            (s.letter as usize) < self.orders.len()
                && s.exp >= 1
                && s.exp < self.orders[s.letter as usize]
        }) && a.syllables.windows(2).all(|w| w[0].letter != w[1].letter)
    }

    /// Product with an explicit guard on the central exponent.
    pub fn checked_multiply(
        &self,
        a: &CanonicalElement,
        b: &CanonicalElement,
    ) -> Result<CanonicalElement> {
        let mut z = a.z_exp.checked_add(b.z_exp).ok_or(Error::CentralOverflow)?;
        let mut out = a.syllables.clone();
        for &s in &b.syllables {
            match out.last_mut() {
                Some(last) if last.letter == s.letter => {
                    let order = self.orders[s.letter as usize];
                    let mut sum = last.exp + s.exp;
                    if sum >= order {
                        sum -= order;
                        z = z.checked_add(1).ok_or(Error::CentralOverflow)?;
                    }
                    if sum == 0 {
                        // the neighbours of the vanished syllable meet next
                        out.pop();
                    } else {
                        last.exp = sum;
                    }
                }
                _ => out.push(s),
            }
        }
        Ok(CanonicalElement {
            z_exp: z,
            syllables: out,
        })
    }

    pub fn multiply(&self, a: &CanonicalElement, b: &CanonicalElement) -> CanonicalElement {
        self.checked_multiply(a, b)
            .expect("central exponent out of i64 range")
    }

    /// Each `x^e` inverts to `z^-1 x^(p-e)`.
    pub fn inverse(&self, a: &CanonicalElement) -> CanonicalElement {
        CanonicalElement {
            z_exp: -a.z_exp - a.syllables.len() as i64,
            syllables: a
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable {
                    letter: s.letter,
                    exp: self.orders[s.letter as usize] - s.exp,
                })
                .collect(),
        }
    }

    pub(crate) fn letter_name(&self, letter: u8) -> String {
        if self.orders.len() == 2 {
            ["x", "y"][letter as usize].to_string()
        } else {
            format!("x{}", letter + 1)
        }
    }

    pub fn display<'a>(&'a self, a: &'a CanonicalElement) -> impl fmt::Display + 'a {
        DisplayElement { group: self, a }
    }
}

struct DisplayElement<'a> {
    group: &'a TorusGroup,
    a: &'a CanonicalElement,
}

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a.is_identity() {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        if self.a.z_exp != 0 {
            parts.push(format!("z^{}", self.a.z_exp));
        }
        for s in &self.a.syllables {
            parts.push(format!("{}^{}", self.group.letter_name(s.letter), s.exp));
        }
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    const X: u8 = 0;
    const Y: u8 = 1;

    fn group(p: u32, q: u32) -> TorusGroup {
        TorusGroup::new(TorusParams::new(p, q).unwrap())
    }

    fn elem(z: i64, syl: &[(u8, u32)]) -> CanonicalElement {
        CanonicalElement {
            z_exp: z,
            syllables: syl
                .iter()
                .map(|&(letter, exp)| Syllable { letter, exp })
                .collect(),
        }
    }

    #[test]
    fn identity_laws() {
        let g = group(4, 3);
        let id = g.identity();
        assert_eq!(id, elem(0, &[]));
        let a = elem(2, &[(X, 3), (Y, 1)]);
        assert_eq!(g.multiply(&id, &a), a);
        assert_eq!(g.inverse(&id), id);
    }

    #[test]
    fn multiply_examples() {
        let g = group(4, 3);
        assert_eq!(
            g.multiply(&elem(0, &[(X, 2)]), &elem(0, &[(X, 2)])),
            elem(1, &[])
        );
        assert_eq!(
            g.multiply(&elem(0, &[(X, 1)]), &elem(0, &[(Y, 1)])),
            elem(0, &[(X, 1), (Y, 1)])
        );
        let g23 = group(2, 3);
        assert_eq!(
            g23.multiply(&elem(0, &[(X, 1), (Y, 2)]), &elem(0, &[(Y, 1)])),
            elem(1, &[(X, 1)])
        );
    }

    #[test]
    fn cascading_carries() {
        // x y^2 x * x y x collapses completely for p = 2, q = 3
        let g = group(2, 3);
        let a = elem(0, &[(X, 1), (Y, 2), (X, 1)]);
        let b = elem(0, &[(X, 1), (Y, 1), (X, 1)]);
        assert_eq!(g.multiply(&a, &b), elem(3, &[]));
        let c = elem(0, &[(X, 1), (Y, 2), (X, 1)]);
        assert_eq!(g.multiply(&a, &c), elem(2, &[(X, 1), (Y, 1), (X, 1)]));
        assert_eq!(g.multiply(&a, &g.inverse(&a)), g.identity());
    }

    #[test]
    fn inverse_examples() {
        let g = group(4, 3);
        assert_eq!(g.inverse(&elem(0, &[(X, 1)])), elem(-1, &[(X, 3)]));
    }

    #[test]
    fn generators_are_distinct() {
        let g = group(2, 2);
        let gens = g.generators();
        assert_eq!(gens.len(), 6);
        assert_eq!(gens[4], elem(1, &[]));
        assert_eq!(gens[1], elem(-1, &[(X, 1)]));
        for p in 2..=6 {
            for q in 2..=6 {
                let set: HashSet<_> = group(p, q).generators().into_iter().collect();
                assert_eq!(set.len(), 6);
            }
        }
    }

    #[test]
    fn relations_hold() {
        for (p, q) in [(2, 3), (4, 6), (5, 5)] {
            let g = group(p, q);
            assert_eq!(g.letter_power(X, p as i64), g.z_power(1));
            assert_eq!(g.letter_power(Y, q as i64), g.z_power(1));
            assert_eq!(g.letter_power(X, -(p as i64)), g.z_power(-1));
        }
    }

    #[test]
    fn display() {
        let g = group(4, 3);
        assert_eq!(
            g.display(&elem(-1, &[(X, 3), (Y, 2)])).to_string(),
            "z^-1 x^3 y^2"
        );
        assert_eq!(g.display(&g.identity()).to_string(), "1");
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(TorusGroup::with_orders(&[3, 1]).is_err());
        assert!(TorusGroup::with_orders(&[]).is_err());
    }

    fn arb_case() -> impl Strategy<Value = (TorusGroup, Vec<Vec<(u8, i64)>>)> {
        (2u32..=7, 2u32..=7).prop_flat_map(|(p, q)| {
            let word = prop::collection::vec((0u8..3, -9i64..=9), 0..8);
            (Just(group(p, q)), prop::collection::vec(word, 3))
        })
    }

    /// Evaluates a word of generator powers; letter 2 stands for `z`.
    fn eval(g: &TorusGroup, word: &[(u8, i64)]) -> CanonicalElement {
        word.iter().fold(g.identity(), |acc, &(l, e)| {
            let piece = if l == 2 {
                g.z_power(e)
            } else {
                g.letter_power(l, e)
            };
            g.multiply(&acc, &piece)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn group_laws((g, words) in arb_case()) {
            let a = eval(&g, &words[0]);
            let b = eval(&g, &words[1]);
            let c = eval(&g, &words[2]);
            prop_assert!(g.is_canonical(&a));
            prop_assert_eq!(
                g.multiply(&g.multiply(&a, &b), &c),
                g.multiply(&a, &g.multiply(&b, &c))
            );
            prop_assert_eq!(g.multiply(&a, &g.inverse(&a)), g.identity());
            prop_assert_eq!(g.multiply(&g.inverse(&a), &a), g.identity());
            prop_assert_eq!(g.inverse(&g.inverse(&a)), a.clone());
            let z = g.z_power(1);
            prop_assert_eq!(g.multiply(&z, &a), g.multiply(&a, &z));
        }
    }
}
