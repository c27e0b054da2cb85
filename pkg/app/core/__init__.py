# Core: configuração, log, cache e exceções
