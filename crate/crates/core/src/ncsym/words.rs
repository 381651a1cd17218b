//! Truncation of an expression to the words in `x_1, ..., x_n`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_traits::Zero;

use super::{Basis, NCExpr, Rational};
use crate::error::Result;
use crate::limits::Limits;
use crate::partition::SetPartition;

/// A monomial `x_{i_1} x_{i_2} ... x_{i_d}`, stored as its index sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

fn matches(basis: Basis, pi: &SetPartition, word: &[usize]) -> bool {
    let d = word.len();
    for j in 0..d {
        for k in j + 1..d {
            let same_block = pi.same_block(j + 1, k + 1);
            let same_letter = word[j] == word[k];
            let ok = match basis {
                Basis::M => same_block == same_letter,
                Basis::P => !same_block || same_letter,
                Basis::E => !same_block || !same_letter,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Every word over `n_vars` letters with its coefficient, read off from the
/// defining index conditions of each basis. Zero coefficients are omitted.
pub fn expand_words(
    x: &NCExpr,
    n_vars: usize,
    limits: &Limits,
) -> Result<BTreeMap<Word, Rational>> {
    let d = x.degree();
    limits.check_words(n_vars, d)?;
    let mut out = BTreeMap::new();
    for word in (0..d).map(|_| 1..=n_vars).multi_cartesian_product() {
        let mut c = Rational::zero();
        for (pi, coeff) in x.terms() {
            if matches(x.basis(), pi, &word) {
                c += coeff;
            }
        }
        if !c.is_zero() {
            out.insert(Word(word), c);
        }
    }
    Ok(out)
}
