use std::collections::HashMap;

use crate::complex::SimplicialComplex;

/// Exact evaluation of the recursive definition: a point is non-evasive, and
/// so is any complex with a vertex whose link and deletion both are.
pub fn is_non_evasive(x: &SimplicialComplex) -> bool {
    let mut memo = HashMap::new();
    non_evasive(x, &mut memo)
}

fn non_evasive(x: &SimplicialComplex, memo: &mut HashMap<Vec<u64>, bool>) -> bool {
    if x.is_void() || x.is_empty_complex() {
        return false;
    }
    if x.is_single_vertex() {
        return true;
    }
    if x.reduced_euler_characteristic() != 0 {
        return false;
    }
    let facets = x.facets();
    let apex = facets.iter().fold(x.support(), |acc, f| acc.intersection(*f));
    if !apex.is_empty() {
        return true;
    }
    let key: Vec<u64> = x.compress_labels().facets().iter().map(|f| f.bits()).collect();
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let answer = x.support().vertices().any(|v| {
        let (link, del) = x.link_and_del(v).expect("vertex of the complex");
        non_evasive(&link, memo) && non_evasive(&del, memo)
    });
    memo.insert(key, answer);
    answer
}
