//! Independent reference computations shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use homalg::scalars::QLaurent;
use homalg::uea_sl2::{Gen, Pbw, UElem};
use homalg::LinComb;

/// A word in the free algebra on `X < Y < Z`, letters as chars.
pub type Word = Vec<char>;

pub fn letter(g: Gen) -> char {
    match g {
        Gen::X => 'X',
        Gen::Y => 'Y',
        Gen::Z => 'Z',
    }
}

pub fn generator(c: char) -> Gen {
    match c {
        'X' => Gen::X,
        'Y' => Gen::Y,
        'Z' => Gen::Z,
        _ => panic!("not a generator: {c}"),
    }
}

/// Rewrites `word` to PBW normal form by repeatedly replacing the leftmost
/// out-of-order adjacent pair using `YX = XY - Z`, `ZX = XZ + 2X`,
/// `ZY = YZ - 2Y`.
pub fn normal_form(word: &[char]) -> BTreeMap<Word, i64> {
    let mut pending: Vec<(Word, i64)> = vec![(word.to_vec(), 1)];
    let mut done: BTreeMap<Word, i64> = BTreeMap::new();
    while let Some((w, c)) = pending.pop() {
        let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) else {
            *done.entry(w).or_insert(0) += c;
            continue;
        };
        let (a, b) = (w[i], w[i + 1]);
        let splice = |middle: &[char]| -> Word { w[..i].iter().chain(middle).chain(&w[i + 2..]).copied().collect() };
        pending.push((splice(&[b, a]), c));
        match (a, b) {
            ('Y', 'X') => pending.push((splice(&['Z']), -c)),
            ('Z', 'X') => pending.push((splice(&['X']), 2 * c)),
            ('Z', 'Y') => pending.push((splice(&['Y']), -2 * c)),
            _ => unreachable!("only out-of-order pairs are rewritten"),
        }
    }
    done.retain(|_, c| *c != 0);
    done
}

/// Reads a sorted word `X^a Y^b Z^c` as a PBW monomial.
pub fn sorted_word_to_pbw(w: &[char]) -> Pbw {
    let count = |g: char| w.iter().filter(|&&h| h == g).count() as u32;
    Pbw::new(count('X'), count('Y'), count('Z'))
}

pub fn normal_form_elem(word: &[char]) -> UElem {
    LinComb::from_terms(
        normal_form(word)
            .into_iter()
            .map(|(w, c)| (sorted_word_to_pbw(&w), QLaurent::from_int(c))),
    )
}

/// All words of length `<= max_len`, shortest first.
pub fn words(max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Word| {
                ['X', 'Y', 'Z'].into_iter().map(move |g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// `q^k`.
pub fn qp(k: i64) -> QLaurent {
    QLaurent::q_pow(k)
}
