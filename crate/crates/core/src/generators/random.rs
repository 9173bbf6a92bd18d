use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::instance::{choose2, Delta, Instance, TierList};

/// Largest number of incomparable pairs an `n`-agent instance may hold
/// while staying within `budget`.
fn pair_budget(n: usize, budget: Delta) -> u64 {
    let total = 2 * n as u64 * choose2(n as u64);
    (budget * Delta::from_integer(total)).to_integer()
}

fn random_order(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    v
}

/// Random strict orders for everyone, then random adjacent tiers merged for
/// as long as the merged instance stays within `delta_budget`. The same
/// seed always yields the same instance.
pub fn gen_random(n: usize, delta_budget: Delta, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lists: Vec<Vec<Vec<usize>>> =
        (0..2 * n).map(|_| random_order(n, &mut rng).into_iter().map(|a| vec![a]).collect()).collect();
    let mut left = pair_budget(n, delta_budget);
    let mut misses = 0;
    while misses < 8 * n * n && left > 0 {
        let agent = rng.gen_range(0..2 * n);
        let tiers = &mut lists[agent];
        if tiers.len() < 2 {
            misses += 1;
            continue;
        }
        let at = rng.gen_range(0..tiers.len() - 1);
        let cost = (tiers[at].len() * tiers[at + 1].len()) as u64;
        if cost > left {
            misses += 1;
            continue;
        }
        let next = tiers.remove(at + 1);
        tiers[at].extend(next);
        left -= cost;
        misses = 0;
    }
    let women = lists.split_off(n);
    Instance::from_tiers(lists, women).expect("merged tiers still partition")
}

/// Strict men; each woman a random strict prefix followed by one bottom
/// tie whose length is drawn at random and shortened to fit the budget.
pub fn gen_random_top_truncated(n: usize, delta_budget: Delta, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let men: Vec<TierList> = (0..n).map(|_| TierList::strict(&random_order(n, &mut rng)).expect("perm")).collect();
    let mut left = pair_budget(n, delta_budget);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut women: Vec<Option<TierList>> = vec![None; n];
    for w in order {
        let perm = random_order(n, &mut rng);
        let mut tail = rng.gen_range(1..=n.max(1));
        while tail > 1 && choose2(tail as u64) > left {
            tail -= 1;
        }
        left -= choose2(tail as u64);
        let split = n - tail.min(n);
        let mut tiers: Vec<Vec<usize>> = perm[..split].iter().map(|&a| vec![a]).collect();
        if split < n {
            tiers.push(perm[split..].to_vec());
        }
        women[w] = Some(TierList::new(tiers, n).expect("perm"));
    }
    Instance::new(men, women.into_iter().map(|l| l.expect("every woman drawn")).collect()).expect("shape")
}
