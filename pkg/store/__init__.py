# Character-table cache
