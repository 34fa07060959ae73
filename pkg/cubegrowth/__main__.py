from cubegrowth.cli import main

main()
