# Ideals of finite pointed commutative monoids
