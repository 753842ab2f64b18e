//! The Calkin-Wilf tree and a brute-force collision oracle.
//!
//! Tree paths are recorded in descent order: the first letter is the step
//! taken from the root. Since the node value is `X_k(⋯X_1(1))`, the matching
//! matrix product is the *reversed* path, `X_k⋯X_1`.

use std::collections::HashMap;
use std::fmt;
use std::thread;

use crate::certify::{lower, upper};
use crate::error::{Error, Result};
use crate::matrix::Mat2;
use crate::rational::Rational;
use crate::word::{Letter, Word};

/// Longest word length [`collision_search`] accepts.
pub const MAX_COLLISION_LEN: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CwNode {
    pub value: Rational,
    /// Descent from the root; `A` is the `t/(t+1)` step, `B` the `t+1` step.
    pub path: Word,
}

/// `(t/(t+1), t+1)`.
pub fn cw_children(t: &Rational) -> Result<(Rational, Rational)> {
    if !t.is_positive() {
        return Err(Error::NotPositive(t.clone()));
    }
    let succ = t + Rational::one();
    let left = t.checked_div(&succ)?;
    Ok((left, succ))
}

/// Levels `0..=depth` of the tree; level `d` lists its `2^d` nodes left to right.
pub fn cw_tree(depth: usize) -> Vec<Vec<CwNode>> {
    let mut levels = vec![vec![CwNode {
        value: Rational::one(),
        path: Word::empty(),
    }]];
    for _ in 0..depth {
        let next = levels
            .last()
            .expect("root level")
            .iter()
            .flat_map(|node| {
                let (left, right) = cw_children(&node.value).expect("tree values are positive");
                [(left, Letter::A), (right, Letter::B)].map(|(value, letter)| {
                    let mut path = node.path.clone();
                    path.push(letter);
                    CwNode { value, path }
                })
            })
            .collect();
        levels.push(next);
    }
    levels
}

/// The descent word from 1 to `q`, found by walking back up to the root.
pub fn cw_path(q: &Rational) -> Result<Word> {
    if !q.is_positive() {
        return Err(Error::NotPositive(q.clone()));
    }
    let one = Rational::one();
    let mut current = q.clone();
    let mut letters = Vec::new();
    while current != one {
        if current > one {
            letters.push(Letter::B);
            current = current - &one;
        } else {
            letters.push(Letter::A);
            current = current.checked_div(&(&one - &current))?;
        }
    }
    letters.reverse();
    Ok(Word::new(letters))
}

/// Follows `path` from the root.
pub fn cw_replay(path: &Word) -> Rational {
    let (l1, r1) = (lower(1), upper(1));
    path.letters().iter().fold(Rational::one(), |t, letter| {
        let m = match letter {
            Letter::A => &l1,
            Letter::B => &r1,
        };
        m.mobius_apply(&t).expect("positive input")
    })
}

/// Products of all words of length `0..=max_len`. Entry `[k][i]` is the
/// product of `Word::from_index(i, k)`.
pub fn product_levels(a: &Mat2, b: &Mat2, max_len: usize, jobs: usize) -> Vec<Vec<Mat2>> {
    let mut levels = vec![vec![Mat2::identity()]];
    for _ in 0..max_len {
        let next = next_level(levels.last().expect("level 0"), a, b, jobs);
        levels.push(next);
    }
    levels
}

fn next_level(prev: &[Mat2], a: &Mat2, b: &Mat2, jobs: usize) -> Vec<Mat2> {
    let size = prev.len() * 2;
    let product = |i: usize| {
        let gen = if i & 1 == 0 { a } else { b };
        &prev[i >> 1] * gen
    };
    let jobs = jobs.clamp(1, size);
    if jobs == 1 {
        return (0..size).map(product).collect();
    }
    let chunk = size.div_ceil(jobs);
    thread::scope(|scope| {
        let handles: Vec<_> = (0..size)
            .step_by(chunk)
            .map(|start| {
                let end = (start + chunk).min(size);
                scope.spawn(move || (start..end).map(product).collect::<Vec<_>>())
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("product worker panicked"))
            .collect()
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum CollisionResult {
    None,
    Collision {
        first: Word,
        second: Word,
        product: Mat2,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollisionReport {
    pub pair: (Mat2, Mat2),
    pub max_len: usize,
    pub result: CollisionResult,
    pub words_enumerated: u64,
}

impl CollisionReport {
    fn collision(
        pair: (Mat2, Mat2),
        max_len: usize,
        first: Word,
        second: Word,
        product: Mat2,
        words_enumerated: u64,
    ) -> Self {
        assert_ne!(first, second);
        assert_eq!(
            first.product(&pair.0, &pair.1),
            product,
            "re-encoding {first} disagrees"
        );
        assert_eq!(
            second.product(&pair.0, &pair.1),
            product,
            "re-encoding {second} disagrees"
        );
        CollisionReport {
            pair,
            max_len,
            result: CollisionResult::Collision {
                first,
                second,
                product,
            },
            words_enumerated,
        }
    }

    pub fn is_collision(&self) -> bool {
        matches!(self.result, CollisionResult::Collision { .. })
    }
}

impl fmt::Display for CollisionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kind: collision-report")?;
        writeln!(f, "first: {}", self.pair.0)?;
        writeln!(f, "second: {}", self.pair.1)?;
        writeln!(f, "max_len: {}", self.max_len)?;
        writeln!(f, "words_enumerated: {}", self.words_enumerated)?;
        match &self.result {
            CollisionResult::None => writeln!(f, "result: None"),
            CollisionResult::Collision {
                first,
                second,
                product,
            } => {
                writeln!(f, "result: Collision")?;
                writeln!(f, "word_1: {first}")?;
                writeln!(f, "word_2: {second}")?;
                writeln!(f, "product: {product}")
            }
        }
    }
}

/// Looks for two distinct nonempty words of length at most `max_len` with
/// equal products. Words are visited by length, then lexicographically with
/// `A < B`; the first word whose product was already seen is reported along
/// with the earlier word. The result does not depend on `jobs`.
pub fn collision_search(
    p: &Mat2,
    q: &Mat2,
    max_len: usize,
    jobs: usize,
) -> Result<CollisionReport> {
    if !(1..=MAX_COLLISION_LEN).contains(&max_len) {
        return Err(Error::MaxLenOutOfRange {
            got: max_len,
            max: MAX_COLLISION_LEN,
        });
    }
    let mut seen: HashMap<Mat2, (usize, u64)> = HashMap::new();
    let mut level = vec![Mat2::identity()];
    let mut enumerated = 0u64;
    for len in 1..=max_len {
        level = next_level(&level, p, q, jobs);
        for (index, product) in level.iter().enumerate() {
            enumerated += 1;
            let index = index as u64;
            if let Some(&(prev_len, prev_index)) = seen.get(product) {
                return Ok(CollisionReport::collision(
                    (p.clone(), q.clone()),
                    max_len,
                    Word::from_index(prev_index, prev_len),
                    Word::from_index(index, len),
                    product.clone(),
                    enumerated,
                ));
            }
            seen.insert(product.clone(), (len, index));
        }
    }
    Ok(CollisionReport {
        pair: (p.clone(), q.clone()),
        max_len,
        result: CollisionResult::None,
        words_enumerated: enumerated,
    })
}
