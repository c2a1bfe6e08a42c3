use super::{ConstField, EuclideanDomain, PolyRing, UPoly};

/// Squarefree decomposition of a nonzero polynomial over a perfect field:
/// monic pairwise coprime squarefree `g_i` with `f = lc * prod g_i^{m_i}`.
/// Factors are sorted by multiplicity.
pub fn squarefree_decomposition<F: ConstField>(
    ring: &PolyRing<F>,
    f: &[F::Elem],
) -> Vec<(UPoly<F::Elem>, usize)> {
    let mut out = vec![];
    decompose(ring, &ring.monic(f), 1, &mut out);
    out.sort_by_key(|(g, m)| (*m, g.len()));
    out
}

fn decompose<F: ConstField>(
    ring: &PolyRing<F>,
    f: &UPoly<F::Elem>,
    scale: usize,
    out: &mut Vec<(UPoly<F::Elem>, usize)>,
) {
    if f.len() <= 1 {
        return;
    }
    let df = ring.derivative(f);
    let mut c = ring.gcd(f, &df);
    let mut w = ring.exact_div(f, &c).unwrap();
    let mut i = 1;
    while w.len() > 1 {
        let y = ring.gcd(&w, &c);
        let z = ring.exact_div(&w, &y).unwrap();
        if z.len() > 1 {
            out.push((z, i * scale));
        }
        i += 1;
        c = ring.exact_div(&c, &y).unwrap();
        w = y;
    }
    if c.len() > 1 {
        // Remaining part is a p-th power.
        let p = ring.base.characteristic() as usize;
        debug_assert!(p > 0);
        let root: Vec<F::Elem> = c.iter().step_by(p).map(|a| ring.base.pth_root(a)).collect();
        decompose(ring, &root, scale * p, out);
    }
}
