//! Subset and multiset indexing shared by the evaluators.
//!
//! Subsets of a small ground set are bitmasks; numeric order on masks of a
//! fixed popcount is colexicographic order, and the colex rank has the closed
//! form `Σ C(s_i, i+1)` over the sorted elements.

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as usize
}

/// `n`-subsets of `{0..k}` as masks, in colex order.
pub fn subsets(k: usize, n: usize) -> Vec<u64> {
    if n > k {
        return Vec::new();
    }
    if n == 0 {
        return vec![0];
    }
    let mut out = Vec::with_capacity(binom(k, n));
    let mut m: u64 = (1u64 << n) - 1;
    let limit = 1u128 << k;
    while (m as u128) < limit {
        out.push(m);
        // Gosper's hack
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
        if r == 0 {
            break;
        }
    }
    out
}

pub fn colex_rank_mask(mut m: u64) -> usize {
    let mut r = 0;
    let mut i = 1;
    while m != 0 {
        let s = m.trailing_zeros() as usize;
        r += binom(s, i);
        i += 1;
        m &= m - 1;
    }
    r
}

pub fn colex_rank(set: &[u32]) -> usize {
    set.iter().enumerate().map(|(i, &s)| binom(s as usize, i + 1)).sum()
}

/// `n`-subsets of `{0..m}` as sorted index lists, in colex order.
pub fn subsets_vec(m: usize, n: usize) -> Vec<Vec<u32>> {
    if n > m {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(binom(m, n));
    let mut cur: Vec<u32> = (0..n as u32).collect();
    loop {
        out.push(cur.clone());
        // advance the lowest entry that has room below its successor
        let mut i = 0;
        while i < n {
            let bound = if i + 1 < n { cur[i + 1] as usize } else { m };
            if cur[i] as usize + 1 < bound {
                break;
            }
            i += 1;
        }
        if i == n {
            break;
        }
        cur[i] += 1;
        for (j, c) in cur.iter_mut().enumerate().take(i) {
            *c = j as u32;
        }
    }
    out
}

pub fn bits(mut m: u64) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros();
            m &= m - 1;
            Some(b)
        }
    })
}

/// Cancels repeated masks in pairs.
pub fn normalize_masks(v: &mut Vec<u64>) {
    v.sort_unstable();
    let mut out = 0;
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            v[out] = v[i];
            out += 1;
        }
        i = j;
    }
    v.truncate(out);
}

/// Expansion of `w_1 ∧ … ∧ w_n` for vectors given as row lists, as masks of
/// the supporting subsets.
pub fn wedge_masks<'a>(vectors: impl IntoIterator<Item = &'a [u32]>) -> Vec<u64> {
    let mut terms = vec![0u64];
    for w in vectors {
        let mut next = Vec::with_capacity(terms.len() * w.len());
        for &t in &terms {
            for &r in w {
                let b = 1u64 << r;
                if t & b == 0 {
                    next.push(t | b);
                }
            }
        }
        normalize_masks(&mut next);
        terms = next;
        if terms.is_empty() {
            break;
        }
    }
    terms
}

/// Same as [`wedge_masks`] with sorted index lists, for large ground sets.
pub fn wedge_sets<'a>(vectors: impl IntoIterator<Item = &'a [u32]>) -> Vec<Vec<u32>> {
    let mut terms: Vec<Vec<u32>> = vec![Vec::new()];
    for w in vectors {
        let mut next = Vec::with_capacity(terms.len() * w.len());
        for t in &terms {
            for &r in w {
                if let Err(pos) = t.binary_search(&r) {
                    let mut s = t.clone();
                    s.insert(pos, r);
                    next.push(s);
                }
            }
        }
        cancel_pairs(&mut next);
        terms = next;
        if terms.is_empty() {
            break;
        }
    }
    terms
}

pub fn cancel_pairs<T: Ord>(v: &mut Vec<T>) {
    v.sort_unstable();
    let mut keep: Vec<bool> = vec![false; v.len()];
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        keep[i] = (j - i) % 2 == 1;
        i = j;
    }
    let mut idx = 0;
    v.retain(|_| {
        let k = keep[idx];
        idx += 1;
        k
    });
}

/// Applies a matrix given by mask columns to a mask vector.
pub fn apply_mask(cols: &[u64], v: u64) -> u64 {
    bits(v).fold(0, |acc, j| acc ^ cols[j as usize])
}

/// Sparse column `c` of `m` as a row mask (rows < 64).
pub fn column_masks(m: &gf2_linalg::SparseMat) -> Vec<u64> {
    m.columns().iter().map(|c| c.iter().fold(0u64, |a, &r| a | (1 << r))).collect()
}

/// Degree-`n` multisets over `{0..k}` as nondecreasing sequences, colex order.
pub fn multisets(k: usize, n: usize) -> Vec<Vec<u8>> {
    fn rec(k: usize, n: usize, max: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if n == 0 {
            let mut v = cur.clone();
            v.reverse();
            out.push(v);
            return;
        }
        for x in 0..=max.min(k.saturating_sub(1)) {
            if k == 0 {
                break;
            }
            cur.push(x as u8);
            rec(k, n - 1, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 && n > 0 {
        return out;
    }
    rec(k, n, k.saturating_sub(1), &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

/// Product of linear forms, each a list of variable indices, as multisets.
pub fn multiply_linear_forms<'a>(forms: impl IntoIterator<Item = &'a [u32]>) -> Vec<Vec<u8>> {
    let mut terms: Vec<Vec<u8>> = vec![Vec::new()];
    for w in forms {
        let mut next = Vec::with_capacity(terms.len() * w.len());
        for t in &terms {
            for &r in w {
                let mut s = t.clone();
                let pos = s.partition_point(|&x| x <= r as u8);
                s.insert(pos, r as u8);
                next.push(s);
            }
        }
        cancel_pairs(&mut next);
        terms = next;
    }
    terms
}

/// Squarefree product of linear forms (variables idempotent), as monomial masks.
pub fn boolean_product<'a>(forms: impl IntoIterator<Item = &'a [u32]>) -> Vec<u64> {
    let mut terms = vec![0u64];
    for w in forms {
        let mut next = Vec::with_capacity(terms.len() * w.len());
        for &t in &terms {
            for &r in w {
                next.push(t | (1 << r));
            }
        }
        normalize_masks(&mut next);
        terms = next;
    }
    terms
}

/// Mixed-radix index of a tuple, first coordinate most significant.
pub fn tuple_index(parts: &[usize], radix: &[usize]) -> usize {
    parts.iter().zip(radix).fold(0, |acc, (&p, &r)| acc * r + p)
}

pub fn tuple_digits(mut idx: usize, radix: &[usize]) -> Vec<usize> {
    let mut out = vec![0; radix.len()];
    for (o, &r) in out.iter_mut().zip(radix).rev() {
        *o = idx % r;
        idx /= r;
    }
    out
}
