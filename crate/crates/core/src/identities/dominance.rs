use crate::scalar::ExactField;

/// Decides whether some convex combination of `candidates` is at least
/// `target` in every coordinate. By the minimax theorem this holds iff for
/// every nonnegative weight vector some candidate weighs at least as much as
/// the target. An empty candidate set never dominates.
pub fn dominance_holds<F: ExactField>(target: &[u64], candidates: &[Vec<u64>]) -> bool {
    if candidates.is_empty() {
        return false;
    }
    let d = target.len();
    debug_assert!(candidates.iter().all(|c| c.len() == d));
    if candidates.iter().any(|c| c.iter().zip(target).all(|(a, b)| a >= b)) {
        return true;
    }
    let m = candidates.len();
    // rows: Σ λ_p v_p[j] − s_j = t_j (j < d), Σ λ_p = 1
    // columns: λ (m), s (d), artificial (d + 1)
    let rows = d + 1;
    let cols = m + d + rows;
    let f = |x: u64| F::from_u64(x).expect("small integers are representable");
    let mut a: Vec<Vec<F>> = vec![vec![F::zero(); cols]; rows];
    let mut b: Vec<F> = Vec::with_capacity(rows);
    for j in 0..d {
        for (p, c) in candidates.iter().enumerate() {
            a[j][p] = f(c[j]);
        }
        a[j][m + j] = -F::one();
        a[j][m + d + j] = F::one();
        b.push(f(target[j]));
    }
    for x in &mut a[d][..m] {
        *x = F::one();
    }
    a[d][m + d + d] = F::one();
    b.push(F::one());
    let mut basis: Vec<usize> = (0..rows).map(|i| m + d + i).collect();
    phase_one(&mut a, &mut b, &mut basis, m + d);
    basis
        .iter()
        .zip(&b)
        .all(|(&v, value)| v < m + d || value.is_zero())
}

/// Minimises the sum of the artificial variables (columns `≥ first_art`)
/// with Bland's rule, which cannot cycle.
fn phase_one<F: ExactField>(a: &mut [Vec<F>], b: &mut [F], basis: &mut [usize], first_art: usize) {
    let rows = a.len();
    let cols = a[0].len();
    loop {
        // reduced cost of column j: c_j − Σ_{basic artificial rows} a_ij
        let reduced = |j: usize| {
            let base = if j >= first_art { F::one() } else { F::zero() };
            (0..rows)
                .filter(|&i| basis[i] >= first_art)
                .fold(base, |acc, i| acc - a[i][j].clone())
        };
        let Some(q) = (0..cols).find(|&j| !basis.contains(&j) && reduced(j) < F::zero()) else {
            return;
        };
        let mut leave: Option<(usize, F)> = None;
        for i in 0..rows {
            if a[i][q] > F::zero() {
                let ratio = b[i].clone() / a[i][q].clone();
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((p, _)) = leave else {
            // unbounded direction; cannot happen for a bounded-below objective
            return;
        };
        let pivot = a[p][q].clone();
        for x in a[p].iter_mut() {
            *x = x.clone() / pivot.clone();
        }
        b[p] = b[p].clone() / pivot;
        for i in 0..rows {
            if i != p && !a[i][q].is_zero() {
                let factor = a[i][q].clone();
                let pivot_row = a[p].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x = x.clone() - factor.clone() * y.clone();
                }
                b[i] = b[i].clone() - factor * b[p].clone();
            }
        }
        basis[p] = q;
    }
}
