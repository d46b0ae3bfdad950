//! Derivative-free simplex minimization.

#[derive(Debug, Clone)]
pub struct NmOutcome {
    pub x: Vec<f64>,
    pub f: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Best value after each iteration at which it improved.
    pub trace: Vec<(usize, f64)>,
}

/// Minimizes `f` from `x0`. `steps[i]` sizes the initial simplex along axis `i`.
/// Stops when every vertex lies within `tol` (∞-norm) of the best one, or after
/// `max_iter` iterations. Returns `None` if `f` yields a non-finite value.
pub fn nelder_mead<F>(f: F, x0: &[f64], steps: &[f64], tol: f64, max_iter: usize) -> Option<NmOutcome>
where
    F: Fn(&[f64]) -> f64,
{
    let n = x0.len();
    let eval = |x: &[f64]| {
        let v = f(x);
        v.is_finite().then_some(v)
    };
    if n == 0 {
        let v = eval(x0)?;
        return Some(NmOutcome { x: vec![], f: v, iterations: 0, converged: true, trace: vec![(0, v)] });
    }
    let mut pts: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    pts.push(x0.to_vec());
    for i in 0..n {
        let mut p = x0.to_vec();
        p[i] += steps[i];
        pts.push(p);
    }
    let mut vals = Vec::with_capacity(n + 1);
    for p in &pts {
        vals.push(eval(p)?);
    }
    let mut trace = Vec::new();
    let mut best_so_far = f64::INFINITY;
    let mut converged = false;
    let mut iter = 0;
    while iter < max_iter {
        let mut idx: Vec<usize> = (0..=n).collect();
        idx.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
        pts = idx.iter().map(|&i| pts[i].clone()).collect();
        vals = idx.iter().map(|&i| vals[i]).collect();
        if vals[0] < best_so_far {
            best_so_far = vals[0];
            trace.push((iter, vals[0]));
        }
        let diameter = pts[1..]
            .iter()
            .map(|p| p.iter().zip(&pts[0]).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
            .fold(0.0, f64::max);
        if diameter < tol {
            converged = true;
            break;
        }
        iter += 1;

        let mut centroid = vec![0.0; n];
        for p in &pts[..n] {
            for (c, v) in centroid.iter_mut().zip(p) {
                *c += v / n as f64;
            }
        }
        let along = |t: f64| -> Vec<f64> {
            centroid.iter().zip(&pts[n]).map(|(c, w)| c + t * (w - c)).collect()
        };
        let xr = along(-1.0);
        let fr = eval(&xr)?;
        if fr < vals[0] {
            let xe = along(-2.0);
            let fe = eval(&xe)?;
            if fe < fr {
                pts[n] = xe;
                vals[n] = fe;
            } else {
                pts[n] = xr;
                vals[n] = fr;
            }
            continue;
        }
        if fr < vals[n - 1] {
            pts[n] = xr;
            vals[n] = fr;
            continue;
        }
        let (xc, fc) = if fr < vals[n] {
            let xc = along(-0.5);
            let fc = eval(&xc)?;
            (xc, fc)
        } else {
            let xc = along(0.5);
            let fc = eval(&xc)?;
            (xc, fc)
        };
        if fc < vals[n].min(fr) {
            pts[n] = xc;
            vals[n] = fc;
            continue;
        }
        for i in 1..=n {
            let p: Vec<f64> = pts[0].iter().zip(&pts[i]).map(|(b, q)| b + 0.5 * (q - b)).collect();
            vals[i] = eval(&p)?;
            pts[i] = p;
        }
    }
    let best = (0..=n).min_by(|&a, &b| vals[a].total_cmp(&vals[b])).unwrap_or(0);
    if vals[best] < best_so_far {
        trace.push((iter, vals[best]));
    }
    Some(NmOutcome { x: pts[best].clone(), f: vals[best], iterations: iter, converged, trace })
}
