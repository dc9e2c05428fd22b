# The four operator families on weak compositions.
from compdual.compositions import display, flatten
from compdual.operators import a, append, box_add, box_remove, box_remove_set, d, eval_word, jdt_add

alpha = (2, 1, 3)

# box removing: lower the rightmost part equal to i; ZERO when there is none
for i in range(1, 5):
    print(f"d_{i}{display(alpha)} = {display(box_remove(i, alpha))}")

# d_I applies its largest index first
beta = (3, 1, 4, 2, 1)
print("d_[3]", display(beta), "=", display(box_remove_set({1, 2, 3}, beta)))

# appending, and annihilation propagating through a word
print("a_2", display(alpha), "=", display(append(2, alpha)))
print("a_2 d_4", display(alpha), "=", display(eval_word([a(2), d(4)], alpha)))

# jeu de taquin u_i = a_i d_[i-1]; zero parts are kept until flattening
u4 = jdt_add(4, beta)
print("u_4", display(beta), "=", display(u4), "->", display(flatten(u4)))

# box adding: t_1 prepends, t_i bumps the leftmost part equal to i-1
for i in range(1, 7):
    print(f"t_{i}{display(beta)} = {display(box_add(i, beta))}")
