# Connected induced subgraph enumeration toolkit
