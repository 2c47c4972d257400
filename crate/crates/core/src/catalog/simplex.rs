//! Nelder–Mead simplex descent in four dimensions.

pub(crate) const DIM: usize = 4;

pub(crate) type Point = [f64; DIM];

/// Minimizes `f` from `start`; non-finite values count as `+∞`.
pub(crate) fn minimize<F: Fn(&Point) -> f64>(f: F, start: Point, step: f64, max_iter: usize) -> (Point, f64) {
    let eval = |p: &Point| {
        let v = f(p);
        if v.is_finite() {
            v
        } else {
            f64::INFINITY
        }
    };
    let mut simplex: Vec<(Point, f64)> = Vec::with_capacity(DIM + 1);
    simplex.push((start, eval(&start)));
    for i in 0..DIM {
        let mut p = start;
        p[i] += step;
        simplex.push((p, eval(&p)));
    }

    for _ in 0..max_iter {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let (best, worst) = (simplex[0].1, simplex[DIM].1);
        if worst.is_finite() && (worst - best).abs() <= 1e-15 * best.abs().max(1e-300) {
            break;
        }

        let mut centroid = [0.0; DIM];
        for (p, _) in &simplex[..DIM] {
            for i in 0..DIM {
                centroid[i] += p[i] / DIM as f64;
            }
        }
        let towards = |t: f64| {
            let mut q = [0.0; DIM];
            for i in 0..DIM {
                q[i] = centroid[i] + t * (simplex[DIM].0[i] - centroid[i]);
            }
            q
        };

        let reflected = towards(-1.0);
        let fr = eval(&reflected);
        if fr < simplex[0].1 {
            let expanded = towards(-2.0);
            let fe = eval(&expanded);
            simplex[DIM] = if fe < fr { (expanded, fe) } else { (reflected, fr) };
        } else if fr < simplex[DIM - 1].1 {
            simplex[DIM] = (reflected, fr);
        } else {
            let contracted = if fr < simplex[DIM].1 { towards(-0.5) } else { towards(0.5) };
            let fc = eval(&contracted);
            if fc < simplex[DIM].1.min(fr) {
                simplex[DIM] = (contracted, fc);
            } else {
                let anchor = simplex[0].0;
                for (p, v) in simplex.iter_mut().skip(1) {
                    for i in 0..DIM {
                        p[i] = anchor[i] + 0.5 * (p[i] - anchor[i]);
                    }
                    *v = eval(p);
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    simplex[0]
}
