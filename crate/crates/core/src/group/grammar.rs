//! Enumeration of minimal normal words `z^i u`.
//!
//! `u` alternates syllables `x^e`, `y^f` with `|e| <= p/2`, `|f| <= q/2`,
//! all nontrivial, and costs `|i| + sum |e|`. For an even order `p = 2n`
//! the syllables `x^n` and `x^-n` name the same coset of `<z>` and are
//! restricted so that each element has exactly one word:
//!
//! * `i > 0`: only `x^n`; `i < 0`: only `x^-n`.
//! * `i = 0`, one even order: every `x^n` comes before every `x^-n`.
//! * `i = 0`, both even: type alpha (`x^n` before `x^-n`, only `y^-m`) or
//!   type beta (only `x^n`, `y^m` before `y^-m`); their overlap, gamma
//!   (only `x^n` and `y^-m`), is counted once by inclusion-exclusion.
//!
//! With more than two factors only odd orders are supported, where no
//! restriction applies.

use super::{CanonicalElement, TorusGroup};
use crate::error::{Error, Result};
use crate::formulas::{ParityCase, TorusParams};

use super::bfs::SphereCounts;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Boundary {
    OnlyPositive,
    OnlyNegative,
    PositiveFirst,
}

/// A minimal normal word: `z^z_exp` followed by signed syllables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalWord {
    pub z_exp: i64,
    pub syllables: Vec<(u8, i32)>,
}

impl NormalWord {
    pub fn length(&self) -> usize {
        self.z_exp.unsigned_abs() as usize
            + self
                .syllables
                .iter()
                .map(|&(_, e)| e.unsigned_abs() as usize)
                .sum::<usize>()
    }

    /// The element this word spells.
    pub fn evaluate(&self, group: &TorusGroup) -> CanonicalElement {
        self.syllables
            .iter()
            .fold(group.z_power(self.z_exp), |acc, &(letter, e)| {
                group.multiply(&acc, &group.letter_power(letter, i64::from(e)))
            })
    }
}

type WordFilter<'a> = &'a dyn Fn(&[(u8, i32)]) -> bool;

struct Alphabet {
    halves: Vec<i32>,
    even: Vec<bool>,
}

impl Alphabet {
    fn new(orders: &[u32]) -> Self {
        Self {
            halves: orders.iter().map(|&p| (p / 2) as i32).collect(),
            even: orders.iter().map(|&p| p % 2 == 0).collect(),
        }
    }

    /// Depth-first walk over every admissible `u` of cost at most `budget`.
    fn walk<F>(&self, rules: &[Boundary], budget: usize, visit: &mut F)
    where
        F: FnMut(&[(u8, i32)], usize),
    {
        let mut word = Vec::new();
        self.step(rules, budget, 0, None, 0, &mut word, visit);
    }

    #[allow(clippy::too_many_arguments)]
    fn step<F>(
        &self,
        rules: &[Boundary],
        budget: usize,
        used: usize,
        last: Option<u8>,
        seen_negative: u64,
        word: &mut Vec<(u8, i32)>,
        visit: &mut F,
    ) where
        F: FnMut(&[(u8, i32)], usize),
    {
        visit(word, used);
        for letter in 0..self.halves.len() as u8 {
            if Some(letter) == last {
                continue;
            }
            let l = letter as usize;
            let half = self.halves[l];
            for e in (-half..=half).filter(|&e| e != 0) {
                let cost = e.unsigned_abs() as usize;
                if used + cost > budget {
                    continue;
                }
                let mut seen = seen_negative;
                if self.even[l] && e.abs() == half {
                    let bit = 1u64 << l;
                    let allowed = match rules[l] {
                        Boundary::OnlyPositive => e > 0,
                        Boundary::OnlyNegative => e < 0,
                        Boundary::PositiveFirst => e < 0 || seen & bit == 0,
                    };
                    if !allowed {
                        continue;
                    }
                    if e < 0 {
                        seen |= bit;
                    }
                }
                word.push((letter, e));
                self.step(rules, budget, used + cost, Some(letter), seen, word, visit);
                word.pop();
            }
        }
    }

    fn length_counts(&self, rules: &[Boundary], n: usize) -> Vec<i64> {
        let mut counts = vec![0i64; n + 1];
        self.walk(rules, n, &mut |_, len| counts[len] += 1);
        counts
    }
}

/// The `i = 0` rule sets, each with a sign for inclusion-exclusion.
fn central_free_classes(orders: &[u32]) -> Result<Vec<(i64, Vec<Boundary>)>> {
    use Boundary::*;
    let even: Vec<bool> = orders.iter().map(|p| p % 2 == 0).collect();
    match (orders.len(), even.as_slice()) {
        (_, e) if e.iter().all(|&x| !x) => Ok(vec![(1, vec![PositiveFirst; orders.len()])]),
        (2, [true, false]) | (2, [false, true]) => Ok(vec![(1, vec![PositiveFirst; 2])]),
        (2, [true, true]) => Ok(vec![
            (1, vec![PositiveFirst, OnlyNegative]),
            (1, vec![OnlyPositive, PositiveFirst]),
            (-1, vec![OnlyPositive, OnlyNegative]),
        ]),
        _ => Err(Error::InvalidOddList(orders.to_vec())),
    }
}

/// Number of minimal normal words of each length `0..=n`.
pub fn normal_word_counts(orders: &[u32], n: usize) -> Result<Vec<u64>> {
    let classes = central_free_classes(orders)?;
    let alphabet = Alphabet::new(orders);
    let r = orders.len();
    let positive = alphabet.length_counts(&vec![Boundary::OnlyPositive; r], n);
    let negative = alphabet.length_counts(&vec![Boundary::OnlyNegative; r], n);
    let mut central_free = vec![0i64; n + 1];
    for (sign, rules) in &classes {
        for (acc, c) in central_free
            .iter_mut()
            .zip(alphabet.length_counts(rules, n))
        {
            *acc += sign * c;
        }
    }
    Ok((0..=n)
        .map(|len| {
            let shifted: i64 = (1..=len)
                .map(|i| positive[len - i] + negative[len - i])
                .sum();
            u64::try_from(central_free[len] + shifted).expect("nonnegative count")
        })
        .collect())
}

/// `a_0 .. a_N` of `T'_{p,q}` by counting minimal normal words.
pub fn sphere_counts_grammar(params: TorusParams, n: usize) -> SphereCounts {
    SphereCounts {
        p: params.p(),
        q: params.q(),
        counts: normal_word_counts(&[params.p(), params.q()], n)
            .expect("two-factor grammar is always defined"),
    }
}

/// Every minimal normal word of length at most `n`, each element once.
pub fn normal_words(params: TorusParams, n: usize) -> Vec<NormalWord> {
    let orders = [params.p(), params.q()];
    let alphabet = Alphabet::new(&orders);
    let classes = central_free_classes(&orders).expect("two factors");
    let mut words = Vec::new();
    let mut collect = |z_exp: i64, rules: &[Boundary], budget: usize, skip: WordFilter| {
        alphabet.walk(rules, budget, &mut |u, _| {
            if !skip(u) {
                words.push(NormalWord {
                    z_exp,
                    syllables: u.to_vec(),
                });
            }
        });
    };
    for i in 1..=n as i64 {
        let budget = n - i as usize;
        collect(i, &[Boundary::OnlyPositive; 2], budget, &|_| false);
        collect(-i, &[Boundary::OnlyNegative; 2], budget, &|_| false);
    }
    let in_gamma = |u: &[(u8, i32)]| {
        u.iter().all(|&(l, e)| {
            let half = (orders[l as usize] / 2) as i32;
            e.abs() != half || (l == 0 && e > 0) || (l == 1 && e < 0)
        })
    };
    match params.parity() {
        ParityCase::EvenEven => {
            collect(0, &classes[0].1, n, &|_| false);
            collect(0, &classes[1].1, n, &in_gamma);
        }
        _ => collect(0, &classes[0].1, n, &|_| false),
    }
    words
}
