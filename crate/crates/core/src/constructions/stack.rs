use crate::collapse::{Certificate, Direction};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;

/// Replaces the top-dimensional facet `sigma` by the cone over its boundary
/// with apex one past the largest ground vertex.
pub fn stacking_move(x: &SimplicialComplex, sigma: Face) -> Result<SimplicialComplex> {
    if !x.contains(sigma) || !x.is_maximal(sigma) || sigma.dim() != x.dim() {
        return Err(Error::Input(format!("{sigma} is not a top-dimensional facet")));
    }
    let v = apex(x)?;
    let mut facets: Vec<Face> = x.facets().into_iter().filter(|&f| f != sigma).collect();
    facets.extend(sigma.facets().map(|g| g.with(v)));
    SimplicialComplex::from_facets(facets).with_ground(x.ground().with(v))
}

fn apex(x: &SimplicialComplex) -> Result<u32> {
    let v = x.ground().max_vertex().unwrap_or(0) + 1;
    if v > 64 {
        return Err(Error::Size("stacking needs a 65th vertex label".into()));
    }
    Ok(v)
}

/// Anticollapse certificate for `stacking_move(x, sigma)`, given one for `x`:
/// refill `sigma ∪ v`, replay `x`'s moves, then grow the link of `v` one
/// vertex at a time until it is the full simplex on the old ground set.
pub fn stacking_certificate(x: &SimplicialComplex, sigma: Face, cert: &Certificate) -> Result<Certificate> {
    if cert.kind != Direction::Anticollapse {
        return Err(Error::Input("expected an anticollapse certificate".into()));
    }
    cert.replay(x)?;
    let v = apex(x)?;
    let y = stacking_move(x, sigma)?;
    let mut steps = vec![(sigma, sigma.with(v))];
    steps.extend(cert.steps.iter().map(|s| (s.free, s.coface)));
    let mut link = sigma;
    let s = sigma.min_vertex().expect("nonempty facet");
    for w in x.ground().difference(sigma).vertices() {
        let rest = link.without(s);
        let mut betas: Vec<Face> = rest.subsets().collect();
        betas.sort();
        for beta in betas {
            let f = beta.with(v).with(w);
            steps.push((f, f.with(s)));
        }
        link = link.with(w);
    }
    Ok(Certificate::record(&y, Direction::Anticollapse, steps)?.0)
}
