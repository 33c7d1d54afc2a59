//! Solution sequences of the simultaneous Pellian equations
//!
//! ```text
//! Az² − Cx² = A − C        (the v-sequence, coefficient 2S)
//! Bz² − Cy² = B − C        (the w-sequence, coefficient 2T)
//! ```
//!
//! and the intersection search over their fundamental classes with
//! z₀ = z₁ = ±1 and companion 1. A common value z with |z| > 1 yields the
//! extension candidate D = (z²−1)/C of the triple {A, B, C}.

use crate::arith::{as_square, Nat};
use crate::tuples::{triple_rst, verify_tuple};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Which Pellian equation a sequence solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqKind {
    /// z-values of Az² − Cx² = A − C; recurrence v_{m+2} = 2S·v_{m+1} − v_m.
    V,
    /// z-values of Bz² − Cy² = B − C; recurrence w_{n+2} = 2T·w_{n+1} − w_n.
    W,
}

/// Sign of the fundamental solution z₀ (or z₁).
pub type Lambda = i8;

/// A Diophantine triple A < B < C with certified roots
/// AB+1 = R², AC+1 = S², BC+1 = T².
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellTriple {
    pub a: Nat,
    pub b: Nat,
    pub c: Nat,
    pub r: Nat,
    pub s: Nat,
    pub t: Nat,
}

/// Certifies {a, b, c} as a Diophantine triple and attaches R, S, T.
pub fn make_pell_triple(a: &Nat, b: &Nat, c: &Nat) -> Result<PellTriple> {
    let t = triple_rst(a, b, c)?;
    Ok(PellTriple {
        a: t.a,
        b: t.b,
        c: t.c,
        r: t.r,
        s: t.s,
        t: t.t,
    })
}

/// Lazily extended binary recurrence of Pellian solutions in one
/// fundamental class.
///
/// Fundamental pair fixed to (λ, 1): the initial term is z₀ = λ with
/// companion x₀ = 1 (or z₁ = λ, y₁ = 1 for the w-sequence). Terms are
/// strictly increasing from index 1 onward.
#[derive(Debug, Clone)]
pub struct PellSequence {
    pub kind: SeqKind,
    pub lambda: Lambda,
    /// 2S for a v-sequence, 2T for a w-sequence.
    pub coeff: BigInt,
    terms: Vec<BigInt>,
}

impl PellSequence {
    pub fn new(pt: &PellTriple, kind: SeqKind, lambda: Lambda) -> Self {
        assert!(lambda == 1 || lambda == -1, "lambda must be ±1");
        let (root, c) = match kind {
            SeqKind::V => (&pt.s, &pt.c),
            SeqKind::W => (&pt.t, &pt.c),
        };
        let root = BigInt::from(root.clone());
        let c = BigInt::from(c.clone());
        let z0 = BigInt::from(lambda);
        // v1 = S·z0 + C·x0 with x0 = 1 (w analogue: T·z1 + C·y1, y1 = 1)
        let z1 = &root * &z0 + &c;
        PellSequence {
            kind,
            lambda,
            coeff: root << 1,
            terms: vec![z0, z1],
        }
    }

    fn ensure_len(&mut self, len: usize) {
        while self.terms.len() < len {
            let n = self.terms.len();
            let next = &self.coeff * &self.terms[n - 1] - &self.terms[n - 2];
            self.terms.push(next);
        }
    }

    /// Term at the given index, extending the cache on demand.
    pub fn term(&mut self, index: usize) -> &BigInt {
        self.ensure_len(index + 1);
        &self.terms[index]
    }

    /// The first `count` terms.
    pub fn terms(&mut self, count: usize) -> &[BigInt] {
        self.ensure_len(count);
        &self.terms[..count]
    }
}

/// First `count` terms of the chosen sequence, exactly satisfying the
/// recurrence.
pub fn generate_sequence(
    pt: &PellTriple,
    kind: SeqKind,
    lambda: Lambda,
    count: usize,
) -> Result<PellSequence> {
    if count < 1 {
        return Err(Error::InvalidParameter("count must be at least 1".into()));
    }
    let mut seq = PellSequence::new(pt, kind, lambda);
    seq.ensure_len(count);
    Ok(seq)
}

/// Checks whether z admits an integer companion for the Pellian equation
/// of the given kind, returning the companion when it exists.
///
/// For the v-kind: x with Az² − Cx² = A − C, i.e. x² = (Az² − A + C)/C.
pub fn check_pell_term(pt: &PellTriple, kind: SeqKind, z: &BigInt) -> Option<Nat> {
    let lead = match kind {
        SeqKind::V => &pt.a,
        SeqKind::W => &pt.b,
    };
    let lead = BigInt::from(lead.clone());
    let c = BigInt::from(pt.c.clone());
    let num = &lead * z * z - &lead + &c;
    if num.is_negative() || !(&num % &c).is_zero() {
        return None;
    }
    let (_, sq) = (num / c).into_parts();
    as_square(&sq)
}

/// A matched pair of indices with common value z in the λ sign class.
///
/// j and k are the raw sequence indices; the half-indices m = j/2, n = k/2
/// are meaningful because every witness in the restricted classes has even
/// indices (odd-index matches are surfaced as [`Anomaly`], never dropped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionWitness {
    pub j: usize,
    pub k: usize,
    pub lambda: Lambda,
    pub z: BigInt,
    /// Induced extension D = (z²−1)/C.
    pub d: Nat,
}

impl IntersectionWitness {
    pub fn m(&self) -> usize {
        self.j / 2
    }

    pub fn n(&self) -> usize {
        self.k / 2
    }

    pub fn to_json(&self, pt: &PellTriple) -> serde_json::Value {
        serde_json::json!({
            "A": pt.a.to_string(),
            "B": pt.b.to_string(),
            "C": pt.c.to_string(),
            "j": self.j,
            "k": self.k,
            "m": self.m(),
            "n": self.n(),
            "lambda": self.lambda,
            "z": self.z.to_string(),
            "D": self.d.to_string(),
        })
    }
}

/// A sequence coincidence that violates one of the expected side
/// conditions (even indices, C | z²−1).
#[derive(Debug, Clone)]
pub struct Anomaly {
    pub j: usize,
    pub k: usize,
    pub lambda: Lambda,
    pub z: BigInt,
    pub reason: String,
}

/// Result of merging the v- and w-sequences of a triple.
#[derive(Debug, Clone, Default)]
pub struct IntersectionScan {
    pub witnesses: Vec<IntersectionWitness>,
    pub anomalies: Vec<Anomaly>,
}

/// All intersections v_j = w_k = z with |z| > 1 and j, k ≤ max_index,
/// over the two diagonal sign classes z₀ = z₁ = λ ∈ {+1, −1}.
///
/// Two-pointer merge on the strictly increasing tails (index ≥ 1 in each
/// sequence; the index-0 terms are ±1 and excluded by the |z| > 1 filter).
pub fn find_intersections(pt: &PellTriple, max_index: usize) -> Result<IntersectionScan> {
    if max_index < 2 {
        return Err(Error::InvalidParameter(
            "max_index must be at least 2".into(),
        ));
    }
    let mut scan = IntersectionScan::default();
    let one = BigInt::from(1);
    for lambda in [1i8, -1] {
        let mut v = PellSequence::new(pt, SeqKind::V, lambda);
        let mut w = PellSequence::new(pt, SeqKind::W, lambda);
        let vs = v.terms(max_index + 1).to_vec();
        let ws = w.terms(max_index + 1).to_vec();
        let (mut i, mut j) = (1usize, 1usize);
        while i <= max_index && j <= max_index {
            match vs[i].cmp(&ws[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let z = vs[i].clone();
                    if z.abs() > one {
                        record(&mut scan, pt, i, j, lambda, z);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    Ok(scan)
}

fn record(
    scan: &mut IntersectionScan,
    pt: &PellTriple,
    j: usize,
    k: usize,
    lambda: Lambda,
    z: BigInt,
) {
    let c = BigInt::from(pt.c.clone());
    let num = &z * &z - 1;
    let rem: BigInt = &num % &c;
    if !rem.is_zero() {
        scan.anomalies.push(Anomaly {
            j,
            k,
            lambda,
            z,
            reason: format!("z^2 - 1 not divisible by C = {}", pt.c),
        });
        return;
    }
    if !j.is_multiple_of(2) || !k.is_multiple_of(2) {
        scan.anomalies.push(Anomaly {
            j,
            k,
            lambda,
            z,
            reason: "odd sequence index".into(),
        });
        return;
    }
    let quotient: BigInt = num / c;
    let (_, d) = quotient.into_parts();
    scan.witnesses.push(IntersectionWitness { j, k, lambda, z, d });
}

/// Checks that a witness D extends {A, B, C} to a Diophantine quadruple,
/// unless D coincides with one of A, B, C.
pub fn witness_extends_to_quadruple(pt: &PellTriple, w: &IntersectionWitness) -> Result<bool> {
    if w.d == pt.a || w.d == pt.b || w.d == pt.c {
        return Ok(true);
    }
    let mut elems = vec![pt.a.clone(), pt.b.clone(), pt.c.clone(), w.d.clone()];
    elems.sort();
    Ok(verify_tuple(&elems)?.ok)
}
