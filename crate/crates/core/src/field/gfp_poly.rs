//! Dense polynomials over a prime field GF(p), coefficients low-to-high.
//!
//! Only what modulus selection needs: reduction, products, gcd and a
//! Ben-Or style irreducibility test.

pub(crate) type Poly = Vec<u32>;

fn trim(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a as u64, (p - 2) as u64, p as u64) as u32
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Remainder of `a` modulo `f` (f nonzero).
pub(crate) fn rem(a: &[u32], f: &[u32], p: u32) -> Poly {
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p) as u64;
    while r.len() > df {
        let dr = r.len() - 1;
        let c = r[dr] as u64 * lead_inv % p as u64;
        let shift = dr - df;
        for (i, &fi) in f.iter().enumerate() {
            let sub = c * fi as u64 % p as u64;
            r[shift + i] = ((r[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut out: Poly = out.into_iter().map(|c| c as u32).collect();
    trim(&mut out);
    out
}

fn mulmod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Poly {
    rem(&mul(a, b, p), f, p)
}

fn powmod(base: &[u32], mut exp: u64, f: &[u32], p: u32) -> Poly {
    let mut acc: Poly = rem(&[1], f, p);
    let mut b = rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(&acc, &b, f, p);
        }
        b = mulmod(&b, &b, f, p);
        exp >>= 1;
    }
    acc
}

fn sub(a: &[u32], b: &[u32], p: u32) -> Poly {
    let len = a.len().max(b.len());
    let mut out: Poly = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

fn gcd(a: &[u32], b: &[u32], p: u32) -> Poly {
    let mut x: Poly = a.to_vec();
    let mut y: Poly = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// Ben-Or: `f` of degree d is irreducible iff gcd(f, x^{p^i} - x) = 1 for
/// every i ≤ d/2.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let d = match f.len() {
        0 | 1 => return false,
        n => n - 1,
    };
    if f[d] == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x: Poly = vec![0, 1];
    let mut h = rem(&x, f, p);
    for _ in 1..=d / 2 {
        h = powmod(&h, p as u64, f, p);
        let g = gcd(f, &sub(&h, &x, p), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Lexicographically smallest monic irreducible polynomial of degree `d`.
///
/// Candidates x^d + c_{d-1}x^{d-1} + ... + c_0 are ordered by the integer
/// Σ c_i p^i, so higher coefficients dominate the comparison.
pub(crate) fn smallest_irreducible(p: u32, d: u32) -> Poly {
    let count = (p as u64).pow(d);
    for v in 0..count {
        let mut f: Poly = Vec::with_capacity(d as usize + 1);
        let mut rest = v;
        for _ in 0..d {
            f.push((rest % p as u64) as u32);
            rest /= p as u64;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_smallest_binary_moduli() {
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(2, 4), vec![1, 1, 0, 0, 1]);
        // x^8 + x^4 + x^3 + x + 1
        assert_eq!(smallest_irreducible(2, 8), vec![1, 1, 0, 1, 1, 0, 0, 0, 1]);
        assert_eq!(smallest_irreducible(3, 1), vec![0, 1]);
    }

    #[test]
    fn irreducibility_matches_root_count_for_cubics() {
        // a cubic over GF(p) is irreducible iff it has no root
        let p = 5;
        for v in 0..125u32 {
            let f = vec![v % 5, (v / 5) % 5, v / 25, 1];
            let has_root = (0..p).any(|x| {
                let val = f
                    .iter()
                    .rev()
                    .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p as u64);
                val == 0
            });
            assert_eq!(is_irreducible(&f, p), !has_root, "{f:?}");
        }
    }
}
