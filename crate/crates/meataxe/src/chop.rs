use gf2_linalg::{Gf2Matrix, Subspace};
use rand::{Rng, SeedableRng};
use rand_xorshift::XorShiftRng;

use crate::module::{rows_to_matrix, spin_script, GModule};
use crate::MeatAxeError;

/// Knobs for the random search behind the irreducibility test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChopConfig {
    /// Longest generator word kept in the pool of algebra elements.
    pub word_len: usize,
    /// Random elements tried before escalating.
    pub retries: usize,
    /// Number of escalations (each doubles the word length).
    pub escalations: usize,
    /// Largest kernel dimension whose nonzero vectors are all spun.
    pub max_nullity: usize,
}

impl Default for ChopConfig {
    fn default() -> Self {
        ChopConfig { word_len: 12, retries: 64, escalations: 3, max_nullity: 6 }
    }
}

pub(crate) fn rng_from_seed(seed: u64) -> XorShiftRng {
    XorShiftRng::seed_from_u64(seed)
}

/// Random elements of the group algebra, drawn from the same recipe in
/// every module of a list so that they can be compared.
pub(crate) struct ElementSource<'a> {
    modules: Vec<&'a GModule>,
    // pool[m][i] is the i-th word evaluated in module m
    pool: Vec<Vec<Gf2Matrix>>,
    lens: Vec<usize>,
    max_len: usize,
}

impl<'a> ElementSource<'a> {
    pub(crate) fn new(modules: Vec<&'a GModule>, word_len: usize) -> Self {
        let ngens = modules[0].gens().len();
        let pool = modules
            .iter()
            .map(|m| if ngens == 0 { vec![Gf2Matrix::identity(m.dim())] } else { m.gens().to_vec() })
            .collect();
        let lens = vec![1; ngens.max(1)];
        ElementSource { modules, pool, lens, max_len: word_len.max(1) }
    }

    pub(crate) fn escalate(&mut self) {
        self.max_len *= 2;
    }

    /// Grows the word pool by one product and returns a random sum of pool
    /// words, plus the identity with probability one half.
    pub(crate) fn next(&mut self, rng: &mut XorShiftRng) -> Result<Vec<Gf2Matrix>, MeatAxeError> {
        let ngens = self.modules[0].gens().len();
        if ngens > 0 {
            let a = rng.random_range(0..self.lens.len());
            let g = rng.random_range(0..ngens);
            let len = self.lens[a] + 1;
            if len <= self.max_len {
                for (pool, m) in self.pool.iter_mut().zip(&self.modules) {
                    let w = pool[a].mul(&m.gens()[g])?;
                    pool.push(w);
                }
                self.lens.push(len);
            }
            // keep the pool bounded: drop the oldest non-generator word
            if self.lens.len() > ngens + 2 * self.max_len {
                for pool in &mut self.pool {
                    pool.remove(ngens);
                }
                self.lens.remove(ngens);
            }
        }
        let n = self.lens.len();
        let terms: Vec<usize> = (0..rng.random_range(1..=3.min(n))).map(|_| rng.random_range(0..n)).collect();
        let with_id = rng.random_bool(0.5);
        let mut out = Vec::with_capacity(self.modules.len());
        for (pool, m) in self.pool.iter().zip(&self.modules) {
            let mut a = if with_id { Gf2Matrix::identity(m.dim()) } else { Gf2Matrix::zeros(m.dim(), m.dim()) };
            for &t in &terms {
                a = a.add(&pool[t])?;
            }
            out.push(a);
        }
        Ok(out)
    }
}

pub(crate) enum Verdict {
    Irreducible,
    /// A proper nonzero invariant subspace.
    Split(Subspace),
}

fn random_nonzero(rng: &mut XorShiftRng, s: &Subspace) -> Vec<u64> {
    let b = s.basis();
    loop {
        let mut v = vec![0u64; b.cols().div_ceil(64)];
        for r in 0..b.rows() {
            if rng.random_bool(0.5) {
                v.iter_mut().zip(b.row_words(r)).for_each(|(x, y)| *x ^= y);
            }
        }
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

fn spun(acts_t: &[Gf2Matrix], dim: usize, v: Vec<u64>) -> Subspace {
    let (vecs, _) = spin_script(acts_t, dim, &[v]);
    Subspace::from_rows(dim, rows_to_matrix(dim, &vecs))
}

/// All nonzero vectors of a subspace.
pub(crate) fn nonzero_vectors(s: &Subspace) -> impl Iterator<Item = Vec<u64>> + '_ {
    let b = s.basis();
    (1u64..1 << b.rows()).map(move |c| {
        let mut v = vec![0u64; b.cols().div_ceil(64)];
        for r in 0..b.rows() {
            if c >> r & 1 == 1 {
                v.iter_mut().zip(b.row_words(r)).for_each(|(x, y)| *x ^= y);
            }
        }
        v
    })
}

/// Norton's irreducibility criterion: for an algebra element `a` with
/// nonzero kernel, the module is irreducible iff every nonzero vector of
/// `ker a` spins to the whole module and some nonzero vector of `ker aᵀ`
/// spins to the whole module under the transposed action.
pub(crate) fn norton(m: &GModule, cfg: &ChopConfig, rng: &mut XorShiftRng) -> Result<Verdict, MeatAxeError> {
    let n = m.dim();
    if n <= 1 {
        return Ok(Verdict::Irreducible);
    }
    // spinning under gᵀ uses the rows of g
    let (acts_t, acts) = (m.gens_t(), m.gens());
    let mut src = ElementSource::new(vec![m], cfg.word_len);
    let mut tried = 0;
    for round in 0..=cfg.escalations {
        if round > 0 {
            src.escalate();
        }
        for _ in 0..cfg.retries {
            tried += 1;
            let a = src.next(rng)?.pop().expect("one module");
            let ker = a.kernel();
            if ker.dim() == 0 {
                continue;
            }
            let s = spun(acts_t, n, random_nonzero(rng, &ker));
            if s.dim() < n {
                return Ok(Verdict::Split(s));
            }
            let ker_t = a.transpose().kernel();
            let u = spun(acts, n, random_nonzero(rng, &ker_t));
            if u.dim() < n {
                return Ok(Verdict::Split(u.orthogonal()));
            }
            if ker.dim() <= cfg.max_nullity {
                for v in nonzero_vectors(&ker) {
                    let s = spun(acts_t, n, v);
                    if s.dim() < n {
                        return Ok(Verdict::Split(s));
                    }
                }
                return Ok(Verdict::Irreducible);
            }
        }
    }
    Err(MeatAxeError::Undecided { dim: n, attempts: tried })
}

/// Whether the module is irreducible, decided by Norton's criterion.
pub fn is_irreducible(m: &GModule, rng_seed: u64) -> Result<bool, MeatAxeError> {
    let mut rng = rng_from_seed(rng_seed);
    Ok(matches!(norton(m, &ChopConfig::default(), &mut rng)?, Verdict::Irreducible))
}

/// Composition factors, bottom first: `chop(sub) ++ chop(quotient)` at each
/// split, so the factors list the layers of a composition series.
pub fn chop(m: &GModule, rng_seed: u64) -> Result<Vec<GModule>, MeatAxeError> {
    chop_with(m, rng_seed, &ChopConfig::default())
}

pub fn chop_with(m: &GModule, rng_seed: u64, cfg: &ChopConfig) -> Result<Vec<GModule>, MeatAxeError> {
    let mut rng = rng_from_seed(rng_seed);
    let mut out = Vec::new();
    // explicit stack, top of stack = next module in series order
    let mut stack = vec![m.clone()];
    while let Some(cur) = stack.pop() {
        if cur.dim() == 0 {
            continue;
        }
        match norton(&cur, cfg, &mut rng)? {
            Verdict::Irreducible => out.push(cur),
            Verdict::Split(s) => {
                let q = cur.quotient(&s)?;
                let sub = cur.submodule(&s)?;
                stack.push(q);
                stack.push(sub);
            }
        }
    }
    Ok(out)
}
