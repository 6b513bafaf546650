//! Test-only oracles written without the library's enumeration or series code.
#![allow(dead_code)]

use num_bigint::BigInt;

/// All partitions of `n`, built recursively with parts bounded by `max`.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn conj(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width).map(|j| parts.iter().filter(|&&p| p >= j).count()).collect()
}

pub fn odd(parts: &[usize]) -> usize {
    parts.iter().filter(|&&p| p % 2 == 1).count()
}

pub fn is_t(parts: &[usize]) -> bool {
    (odd(parts) + 4 - odd(&conj(parts)) % 4).is_multiple_of(4)
}

/// Hook lengths of every cell, row by row.
pub fn hooks(parts: &[usize]) -> Vec<usize> {
    let c = conj(parts);
    let mut out = Vec::new();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            out.push(row - j + c[j] - i - 1);
        }
    }
    out
}

pub fn even_hooks(parts: &[usize]) -> usize {
    hooks(parts).iter().filter(|&&h| h % 2 == 0).count()
}

/// `(p(n), t(n), u(n))` by counting.
pub fn counts(n: usize) -> (i64, i64, i64) {
    let all = partitions(n);
    let t = all.iter().filter(|l| is_t(l)).count() as i64;
    (all.len() as i64, t, all.len() as i64 - t)
}

/// `p(0..=n)` by Euler's recurrence over generalized pentagonal numbers.
pub fn euler_p(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut k = 1i64;
        let mut acc = 0i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                acc += sign * p[m - g2];
            }
            k += 1;
        }
        p[m] = acc;
    }
    p
}

pub fn big(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

/// Schoolbook product truncated at `order`.
pub fn naive_mul(a: &[i128], b: &[i128], order: usize) -> Vec<i128> {
    let mut out = vec![0i128; order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(p(n), t(n))` by walking every partition without storing any.
pub fn type_counts(n: usize) -> (i64, i64) {
    fn go(rest: usize, max: usize, parts: &mut Vec<usize>, p: &mut i64, t: &mut i64) {
        if rest == 0 {
            *p += 1;
            let o = parts.iter().filter(|&&x| x % 2 == 1).count();
            let width = parts.first().copied().unwrap_or(0);
            let mut o_conj = 0;
            let mut len = parts.len();
            for j in 1..=width {
                while len > 0 && parts[len - 1] < j {
                    len -= 1;
                }
                o_conj += len % 2;
            }
            if (o + 4 - o_conj % 4) % 4 == 0 {
                *t += 1;
            }
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            parts.push(part);
            go(rest - part, part, parts, p, t);
            parts.pop();
        }
    }
    let (mut p, mut t) = (0, 0);
    go(n, n, &mut Vec::new(), &mut p, &mut t);
    (p, t)
}
