"""Link-irregular edge labelings: feasibility, exact labeling numbers and constructions."""
