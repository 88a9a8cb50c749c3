# The automaton Z(H) accepts exactly the digit words over {-H..H} that
# evaluate to 0 at the base.  States are the reachable partial values,
# kept finite by certified interval bounds on the expanding conjugates.

from algdigits import build_zero_automaton, make_base, min_height

golden = make_base("x^2 - x - 1")

auto = build_zero_automaton(golden, 1).trim()
print(f"Z(1) for {golden.min_poly}: {auto.n_states} states, "
      f"{auto.n_edges} edges")

# every accepted word really evaluates to 0, and the shortest nonzero
# one recovers the defining relation alpha^2 = alpha + 1
found = auto.shortest_nonzero_word()
print("shortest nonzero zero-word:", found.word,
      "| exact re-check:", found.value_check)
for w in auto.language(4)[:6]:
    assert golden.eval_word(w) == golden.zero

# ----------------------------------------------------------------------
# Word counts and their growth rate

counts = [auto.count_words(n) for n in range(11)]
est, residual = auto.growth_rate()
print("zero words of length 0..10:", counts)
print(f"growth rate ~ {est:.4f} (residual {residual:.1e})")

# ----------------------------------------------------------------------
# The smallest height admitting a nontrivial zero word

for poly in ("x^2 - x - 1", "x - 2", "x^2 - 2", [-3, 2]):
    rep = min_height(poly)
    print(f"{str(make_base(poly).min_poly):12s} h* = {rep.h_star}, "
          f"witness {rep.witness} (searched {rep.searched})")

# ----------------------------------------------------------------------
# Export: machine-readable automaton

payload = build_zero_automaton("x - 2", 2).trim().to_json_dict()
print("\nexport keys:", sorted(payload), "| states:", payload["states"])
