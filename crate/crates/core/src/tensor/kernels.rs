//! Dense f64 matrix kernels, sequential and rayon-parallel.
//!
//! The parallel variants split work by output row; every output element is
//! produced by exactly one task with the same inner-loop order as the
//! sequential code, so results are bit-identical across thread counts and
//! between the two variants. Benchmarks in `benches/kernels.rs` compare the
//! pair directly.

use crate::exec::Mode;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this many multiply-accumulates the rayon dispatch overhead wins;
/// measured crossover is around 2^18 on commodity x86-64.
pub const PAR_MIN_MACS: usize = 1 << 18;

#[inline]
fn worth_par(macs: usize) -> bool {
    cfg!(feature = "parallel") && macs >= PAR_MIN_MACS
}

/// c = a(m×k) @ b(k×n), sequential.
pub fn matmul_seq(a: &[f64], b: &[f64], m: usize, k: usize, n: usize) -> Vec<f64> {
    let mut c = vec![0.0; m * n];
    matmul_rows(&mut c, a, b, k, n, 0);
    c
}

/// c = a(m×k) @ b(k×n), parallel over output rows.
pub fn matmul_par(a: &[f64], b: &[f64], m: usize, k: usize, n: usize) -> Vec<f64> {
    let mut c = vec![0.0; m * n];
    #[cfg(feature = "parallel")]
    {
        c.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
            accumulate_row(row, &a[i * k..(i + 1) * k], b, n);
        });
        let _ = m;
        return c;
    }
    #[cfg(not(feature = "parallel"))]
    {
        matmul_rows(&mut c, a, b, k, n, 0);
        c
    }
}

/// Mode- and size-dispatched matmul.
pub fn matmul(mode: Mode, a: &[f64], b: &[f64], m: usize, k: usize, n: usize) -> Vec<f64> {
    if mode == Mode::Parallel && worth_par(m * k * n) {
        matmul_par(a, b, m, k, n)
    } else {
        matmul_seq(a, b, m, k, n)
    }
}

fn matmul_rows(c: &mut [f64], a: &[f64], b: &[f64], k: usize, n: usize, row0: usize) {
    for (i, row) in c.chunks_mut(n).enumerate() {
        let ai = &a[(row0 + i) * k..(row0 + i + 1) * k];
        accumulate_row(row, ai, b, n);
    }
}

#[inline]
fn accumulate_row(row: &mut [f64], ai: &[f64], b: &[f64], n: usize) {
    for (p, &av) in ai.iter().enumerate() {
        if av == 0.0 {
            continue;
        }
        let brow = &b[p * n..p * n + n];
        for (cv, &bv) in row.iter_mut().zip(brow) {
            *cv += av * bv;
        }
    }
}

/// dst(m×k) += g(m×n) @ b(k×n)ᵀ.
pub fn matmul_nt_acc(mode: Mode, dst: &mut [f64], g: &[f64], b: &[f64], m: usize, n: usize, k: usize) {
    let body = |i: usize, drow: &mut [f64]| {
        let gi = &g[i * n..(i + 1) * n];
        for (p, dv) in drow.iter_mut().enumerate() {
            let brow = &b[p * n..p * n + n];
            let mut s = 0.0;
            for (gv, bv) in gi.iter().zip(brow) {
                s += gv * bv;
            }
            *dv += s;
        }
    };
    if mode == Mode::Parallel && worth_par(m * n * k) {
        #[cfg(feature = "parallel")]
        {
            dst.par_chunks_mut(k).enumerate().for_each(|(i, drow)| body(i, drow));
            return;
        }
    }
    dst.chunks_mut(k).enumerate().for_each(|(i, drow)| body(i, drow));
}

/// dst(k×n) += a(m×k)ᵀ @ g(m×n).
pub fn matmul_tn_acc(mode: Mode, dst: &mut [f64], a: &[f64], g: &[f64], m: usize, k: usize, n: usize) {
    let body = |p: usize, drow: &mut [f64]| {
        for i in 0..m {
            let av = a[i * k + p];
            if av == 0.0 {
                continue;
            }
            let grow = &g[i * n..i * n + n];
            for (dv, &gv) in drow.iter_mut().zip(grow) {
                *dv += av * gv;
            }
        }
    };
    if mode == Mode::Parallel && worth_par(m * n * k) {
        #[cfg(feature = "parallel")]
        {
            dst.par_chunks_mut(n).enumerate().for_each(|(p, drow)| body(p, drow));
            return;
        }
    }
    dst.chunks_mut(n).enumerate().for_each(|(p, drow)| body(p, drow));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(a: &[f64], b: &[f64], m: usize, k: usize, n: usize) -> Vec<f64> {
        let mut c = vec![0.0; m * n];
        for i in 0..m {
            for j in 0..n {
                for p in 0..k {
                    c[i * n + j] += a[i * k + p] * b[p * n + j];
                }
            }
        }
        c
    }

    #[test]
    fn seq_and_par_agree_bitwise() {
        let (m, k, n) = (13, 17, 11);
        let a: Vec<f64> = (0..m * k).map(|i| (i as f64 * 0.37).sin()).collect();
        let b: Vec<f64> = (0..k * n).map(|i| (i as f64 * 0.73).cos()).collect();
        let s = matmul_seq(&a, &b, m, k, n);
        let p = matmul_par(&a, &b, m, k, n);
        assert_eq!(s, p);
        // same summation order as the naive triple loop
        for (x, y) in s.iter().zip(naive(&a, &b, m, k, n)) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn transposed_accumulators_match_naive() {
        let (m, k, n) = (5, 7, 6);
        let a: Vec<f64> = (0..m * k).map(|i| (i as f64).sqrt()).collect();
        let g: Vec<f64> = (0..m * n).map(|i| 1.0 / (1.0 + i as f64)).collect();
        let b: Vec<f64> = (0..k * n).map(|i| (i % 5) as f64 - 2.0).collect();

        let mut da = vec![0.0; m * k];
        matmul_nt_acc(Mode::Sequential, &mut da, &g, &b, m, n, k);
        for i in 0..m {
            for p in 0..k {
                let want: f64 = (0..n).map(|j| g[i * n + j] * b[p * n + j]).sum();
                assert!((da[i * k + p] - want).abs() < 1e-12);
            }
        }

        let mut db = vec![0.0; k * n];
        matmul_tn_acc(Mode::Sequential, &mut db, &a, &g, m, k, n);
        for p in 0..k {
            for j in 0..n {
                let want: f64 = (0..m).map(|i| a[i * k + p] * g[i * n + j]).sum();
                assert!((db[p * n + j] - want).abs() < 1e-12);
            }
        }
    }
}
