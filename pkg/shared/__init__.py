# Shared engines for the dessin correlator toolkit
