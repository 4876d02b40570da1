"""Domain logic of the null-filiform Leibniz algebra engine."""
