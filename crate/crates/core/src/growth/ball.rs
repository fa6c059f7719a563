use std::collections::HashSet;

use crate::algebra::{Element, Flavor};
use crate::terms::Letter;

/// Elements expressible by terms with at most `n` letter occurrences, for
/// each `n ≤ n_max`: `balls[n]`.
pub fn word_balls(n_max: usize, letters: &[Letter], flavor: Flavor) -> Vec<Vec<Element>> {
    let mut balls: Vec<Vec<Element>> = Vec::new();
    let mut seen: HashSet<Element> = HashSet::new();
    for n in 0..=n_max {
        let mut frontier: Vec<Element> = Vec::new();
        let push = |e: Element, seen: &mut HashSet<Element>, frontier: &mut Vec<Element>| {
            if seen.insert(e.clone()) {
                frontier.push(e);
            }
        };
        if n == 0 {
            push(Element::identity(flavor), &mut seen, &mut frontier);
        }
        if n == 1 {
            for &x in letters {
                push(Element::generator(x, flavor), &mut seen, &mut frontier);
            }
        }
        for i in 1..n {
            for x in &balls[i] {
                for y in &balls[n - i] {
                    push(x.multiply(y).expect("same flavor"), &mut seen, &mut frontier);
                }
            }
        }
        // close under the unary operations
        let mut k = 0;
        while k < frontier.len() {
            let e = frontier[k].clone();
            if flavor.has_plus() {
                push(e.plus_op().expect("in signature"), &mut seen, &mut frontier);
            }
            if flavor.has_star() {
                push(e.star_op().expect("in signature"), &mut seen, &mut frontier);
            }
            k += 1;
        }
        let mut ball = if n == 0 { Vec::new() } else { balls[n - 1].clone() };
        ball.extend(frontier);
        balls.push(ball);
    }
    balls
}

/// `balls[n] ∖ balls[n−1]`: the elements whose shortest term has length `n`.
pub fn word_spheres(n_max: usize, letters: &[Letter], flavor: Flavor) -> Vec<Vec<Element>> {
    let balls = word_balls(n_max, letters, flavor);
    (0..=n_max)
        .map(|n| {
            let prev = if n == 0 { 0 } else { balls[n - 1].len() };
            balls[n][prev..].to_vec()
        })
        .collect()
}
