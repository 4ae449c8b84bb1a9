//! Branching checked against Schur polynomials built from semistandard tableaux.

use std::collections::HashMap;

use flagorbits::branching::{restrict_to_levi, tensor_decompose, Partition};

type Poly = HashMap<Vec<u32>, i64>;

/// `s_λ(x_1, …, x_n)` as a sum over semistandard tableaux.
fn schur(l: &Partition, n: usize) -> Poly {
    let cells: Vec<(usize, usize)> = l
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &r)| (0..r as usize).map(move |j| (i, j)))
        .collect();
    let mut grid = vec![vec![0usize; l.part(0) as usize]; l.rows()];
    let mut out = Poly::new();
    fn fill(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, n: usize, out: &mut Poly) {
        if k == cells.len() {
            let mut e = vec![0u32; n];
            for &(i, j) in cells {
                e[grid[i][j]] += 1;
            }
            *out.entry(e).or_insert(0) += 1;
            return;
        }
        let (i, j) = cells[k];
        let lo_row = if j > 0 { grid[i][j - 1] } else { 0 };
        let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..n {
            grid[i][j] = v;
            fill(k + 1, cells, grid, n, out);
        }
    }
    if l.rows() <= n {
        fill(0, &cells, &mut grid, n, &mut out);
    }
    out
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn add_scaled(acc: &mut Poly, p: &Poly, c: i64) {
    for (e, v) in p {
        *acc.entry(e.clone()).or_insert(0) += c * v;
    }
    acc.retain(|_, c| *c != 0);
}

/// Variables of `a` followed by those of `b`.
fn concat(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let mut e = ea.clone();
            e.extend_from_slice(eb);
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out
}

fn partitions_up_to(max: u32, rows: usize) -> Vec<Partition> {
    (0..=max).flat_map(|k| Partition::all(k, rows)).collect()
}

#[test]
fn ssyt_counts_match_known_dimensions() {
    let l: Partition = "2,1".parse().unwrap();
    let total: i64 = schur(&l, 3).values().sum();
    assert_eq!(total, 8);
    let l: Partition = "2,2".parse().unwrap();
    let total: i64 = schur(&l, 3).values().sum();
    assert_eq!(total, 6);
}

#[test]
fn tensor_products_match_schur_products() {
    for n in 1..=3 {
        let ps = partitions_up_to(3, n);
        for a in &ps {
            for b in &ps {
                let mut diff = mul(&schur(a, n), &schur(b, n));
                let d = tensor_decompose(a, b, n).unwrap();
                for (nu, &c) in d.terms() {
                    add_scaled(&mut diff, &schur(nu, n), -(c as i64));
                }
                assert!(diff.is_empty(), "({a}) ⊗ ({b}) in GL_{n}");
            }
        }
    }
}

#[test]
fn restrictions_match_split_variables() {
    for n in 2..=4 {
        for l in partitions_up_to(4, n) {
            let whole = schur(&l, n);
            for p in 1..n {
                let mut diff = whole.clone();
                let r = restrict_to_levi(&l, p, n - p).unwrap();
                for (w, &c) in r.terms() {
                    add_scaled(&mut diff, &concat(&schur(&w.0, p), &schur(&w.1, n - p)), -(c as i64));
                }
                assert!(diff.is_empty(), "({l}) to GL_{p} × GL_{}", n - p);
            }
        }
    }
}
