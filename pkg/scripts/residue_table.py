"""Print admissible residues of n mod 6 for each pair of odd (k, l) residues,
with the smallest admissible length n >= k*l for a few representatives."""

from msts.verifier import admissible_n_residues, minimum_admissible_n

for a in (1, 3, 5):
    for b in (1, 3, 5):
        if b < a:
            continue
        res = sorted(admissible_n_residues(a, b))
        reps = [(k, l) for k in (a, a + 6) for l in (b, b + 6)]
        mins = ", ".join(f"({k},{l})->{minimum_admissible_n(k, l)}" for k, l in reps)
        print(f"k={a} l={b} (mod 6): n mod 6 in {set(res) or '{}'}   {mins}")
