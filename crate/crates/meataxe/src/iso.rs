use gf2_linalg::Gf2Matrix;
use rand_xorshift::XorShiftRng;

use crate::chop::{nonzero_vectors, norton, rng_from_seed, ChopConfig, ElementSource, Verdict};
use crate::module::{apply_words, rows_to_matrix, spin_script, GModule};
use crate::MeatAxeError;

/// Nullities of a fixed list of algebra elements. Isomorphic modules have
/// equal fingerprints, so this is only a pre-filter.
pub fn fingerprint(m: &GModule) -> Vec<usize> {
    let gens = m.gens();
    if gens.is_empty() {
        return Vec::new();
    }
    let id = Gf2Matrix::identity(m.dim());
    let mut prev = id.clone();
    let mut word = gens[0].clone();
    let mut out = Vec::with_capacity(8);
    for i in 0..8 {
        let mut e = word.add(&prev).expect("square");
        if i % 2 == 1 {
            e = e.add(&id).expect("square");
        }
        out.push(m.dim() - e.rank());
        let next = word.mul(&gens[(i + 1) % gens.len()]).expect("square");
        prev = std::mem::replace(&mut word, next);
    }
    out.sort_unstable();
    out
}

/// Replays a spin script from a new seed. The vectors are not required to
/// be independent.
fn replay(acts_t: &[Gf2Matrix], script: &[Option<(usize, usize)>], seed: &[u64]) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = Vec::with_capacity(script.len());
    for step in script {
        let v = match step {
            None => seed.to_vec(),
            Some((parent, g)) => apply_words(&acts_t[*g], &out[*parent]),
        };
        out.push(v);
    }
    out
}

/// Generator actions in the basis given by the columns of `p`.
fn in_basis(gens: &[Gf2Matrix], p: &Gf2Matrix, p_inv: &Gf2Matrix) -> Result<Vec<Gf2Matrix>, MeatAxeError> {
    gens.iter().map(|g| Ok(p_inv.mul(&g.mul(p)?)?)).collect()
}

fn check_pair(a: &GModule, b: &GModule) -> Result<(), MeatAxeError> {
    if a.k() != b.k() || a.gens().len() != b.gens().len() {
        return Err(MeatAxeError::Mismatch(format!(
            "modules for GL_{} ({} generators) and GL_{} ({} generators)",
            a.k(),
            a.gens().len(),
            b.k(),
            b.gens().len()
        )));
    }
    Ok(())
}

/// Isomorphism test for irreducible modules by the standard-basis method.
///
/// A common algebra element with a small kernel is found; a kernel vector
/// of `a` spins to a standard basis, and the same word script is replayed
/// from every kernel vector of `b`. The modules are isomorphic iff one of
/// the replays gives a basis in which the generators act identically.
pub fn iso_simple(a: &GModule, b: &GModule, rng_seed: u64) -> Result<bool, MeatAxeError> {
    check_pair(a, b)?;
    if a.dim() != b.dim() {
        return Ok(false);
    }
    let cfg = ChopConfig::default();
    let mut rng = rng_from_seed(rng_seed);
    for m in [a, b] {
        if let Verdict::Split(_) = norton(m, &cfg, &mut rng)? {
            return Err(MeatAxeError::Reducible(m.dim()));
        }
    }
    if a.dim() == 0 {
        return Ok(true);
    }
    if fingerprint(a) != fingerprint(b) {
        return Ok(false);
    }
    standard_basis_iso(a, b, &cfg, &mut rng)
}

fn standard_basis_iso(a: &GModule, b: &GModule, cfg: &ChopConfig, rng: &mut XorShiftRng) -> Result<bool, MeatAxeError> {
    let n = a.dim();
    let mut src = ElementSource::new(vec![a, b], cfg.word_len);
    let mut tried = 0;
    for round in 0..=cfg.escalations {
        if round > 0 {
            src.escalate();
        }
        for _ in 0..cfg.retries {
            tried += 1;
            let pair = src.next(rng)?;
            let (ka, kb) = (pair[0].kernel(), pair[1].kernel());
            if ka.dim() != kb.dim() {
                return Ok(false);
            }
            if ka.dim() == 0 || ka.dim() > cfg.max_nullity {
                continue;
            }
            let seed_a = ka.basis().row_words(0).to_vec();
            let (vecs, script) = spin_script(a.gens_t(), n, &[seed_a]);
            let pa = rows_to_matrix(n, &vecs).transpose();
            let pa_inv = pa.inverse().expect("an irreducible module spins to a basis");
            let target = in_basis(a.gens(), &pa, &pa_inv)?;
            for seed_b in nonzero_vectors(&kb) {
                let pb = rows_to_matrix(n, &replay(b.gens_t(), &script, &seed_b)).transpose();
                if let Some(pb_inv) = pb.inverse() {
                    if in_basis(b.gens(), &pb, &pb_inv)? == target {
                        return Ok(true);
                    }
                }
            }
            return Ok(false);
        }
    }
    Err(MeatAxeError::Undecided { dim: n, attempts: tried })
}
