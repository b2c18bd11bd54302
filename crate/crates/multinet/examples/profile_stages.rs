use multinet::embedding::{collinearity_ideal, is_admissible, minimal_primes};
use multinet::exec::ExecMode;
use multinet::classify_order6;
use multinet::preembed::standard_preembedding;
use polyring::Budget;
use std::time::Instant;

fn main() {
    let budget = Budget::unlimited();
    let c = classify_order6(ExecMode::Parallel).unwrap();
    let class = c.class(16).unwrap();
    let xi = standard_preembedding(&class.representative).unwrap();
    let ideal = collinearity_ideal(class.representative.structure(), &xi);
    println!("M16 ideal: {} generators", ideal.generators().len());
    let t = Instant::now();
    let comps = minimal_primes(&ideal, &budget, ExecMode::Parallel).unwrap();
    println!("{} leaves in {:?}", comps.len(), t.elapsed());
    for (i, a) in comps.iter().enumerate() {
        let gb = a.default_basis(&budget).unwrap();
        println!("== leaf {i}: {} gens, dim {}, admissible {}", gb.polys().len(),
            a.krull_dimension(&budget).unwrap(), is_admissible(a, &xi, &budget).unwrap());
        println!("   {}", gb.canonical_text());
    }
    for i in 0..comps.len() {
        for j in 0..comps.len() {
            if i != j {
                println!("contains({i},{j}) = {}", comps[i].contains_ideal(&comps[j], &budget).unwrap());
            }
        }
    }
}
