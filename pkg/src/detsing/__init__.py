"""detsing core (bring-up stub)."""
