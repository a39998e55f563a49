from groebner_sat.cli import main

main()
