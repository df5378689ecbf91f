# Three disjoint surfaces, no clasps (a boundary link).
components 3
order 1
order 2
order 3
